#include <doctest.h>

#include "cremona/gallery.hpp"

using namespace cremona;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Shape;
}

}  // namespace

TEST_SUITE("gallery") {
  TEST_CASE("every instance round-trips through JSON") {
    for (const auto& id : example_ids()) {
      INFO(id);
      const auto inst = build_example(id, 101, 1);
      CHECK(inst.attempts <= kMaxReseeds);
      const auto j = to_json(inst);
      CHECK(to_json(instance_from_json(j)) == j);
      CHECK(to_json(instance_from_json(nlohmann::json::parse(j.dump()))) == j);
      CHECK_FALSE(inst.manifest.checks.empty());
    }
  }

  TEST_CASE("retry loops stay within the reseed budget") {
    for (std::uint32_t p : {101u, 32003u})
      for (const char* id : {"bordiga_random", "del_pezzo_cubic"})
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          INFO(id << " p=" << p << " seed=" << seed);
          const auto inst = build_example(id, p, seed);
          CHECK(inst.attempts >= 1);
          CHECK(inst.attempts <= kMaxReseeds);
        }
  }

  TEST_CASE("input errors") {
    CHECK(kind_of([] { build_example("no_such_example", 101); }) == ErrorKind::UnknownId);
    CHECK(kind_of([] { build_example("todd_room", 15); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { default_manifest("no_such_example"); }) == ErrorKind::UnknownId);
    auto j = to_json(build_example("todd_room", 101));
    j["prime"] = 100;
    CHECK(kind_of([&] { instance_from_json(j); }) == ErrorKind::InvalidField);
    j = to_json(build_example("todd_room", 101));
    j.erase("matrix");
    CHECK(kind_of([&] { instance_from_json(j); }) == ErrorKind::MalformedSpec);
  }

  TEST_CASE("paper checks need an anchor") {
    nlohmann::json c = {{"name", "n"}, {"op", "liaison"}, {"expected", 9}, {"provenance", "PAPER"}};
    CHECK(kind_of([&] { check_from_json(c); }) == ErrorKind::MalformedSpec);
    c["anchor"] = "deg = 9";
    CHECK(check_from_json(c).anchor == "deg = 9");
    c["provenance"] = "GUESSED";
    CHECK_THROWS_AS(check_from_json(c), Error);
    for (const auto& id : example_ids())
      for (const auto& check : default_manifest(id).checks)
        if (check.provenance == Provenance::Paper) CHECK_FALSE(check.anchor.empty());
  }

  TEST_CASE("matrix text round trip") {
    const Ring ring{101, 5, MonoOrder::Grevlex};
    const auto a = matrix_from_text(ring, todd_room_matrix_text());
    CHECK(matrix_from_text(ring, matrix_to_text(a)) == a);
    CHECK_THROWS_AS(matrix_from_text(ring, {{"x0", "x1"}, {"x2"}}), Error);
  }

  TEST_CASE("ruling planes on cubics through the Segre threefold") {
    Rng rng(77);
    const auto dp = del_pezzo_quintic(101, rng);
    CHECK(dp.quadrics.size() == 5);
    const Ring& ring = dp.quadrics.front().ring();
    for (int t = 0; t < 10; ++t) {
      std::vector<Poly> lin;
      for (int i = 0; i < 4; ++i) lin.push_back(random_linear_form(ring, rng));
      const auto pc = count_ruling_planes(fano_cubic(dp.quadrics, lin));
      CHECK_FALSE(pc.degenerate);
      CHECK(pc.count <= 2);
    }
    // only the Segre minors: the cubic contains every ruling plane
    std::vector<Poly> lin;
    for (int i = 0; i < 3; ++i) lin.push_back(random_linear_form(ring, rng));
    lin.push_back(Poly(ring));
    CHECK(count_ruling_planes(fano_cubic(dp.quadrics, lin)).degenerate);
  }

  TEST_CASE("Segre cones") {
    for (int ambient : {5, 6, 7}) {
      const auto h = hilbert_data(groebner_basis(segre_cone(ambient, 101)));
      CHECK(h.degree == 3);
      CHECK(h.projective_dimension == ambient - 2);
    }
    CHECK_THROWS_AS(segre_cone(4, 101), Error);
  }
}
