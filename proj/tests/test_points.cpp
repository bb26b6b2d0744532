#include <doctest.h>

#include <set>

#include "cremona/points.hpp"
#include "cremona/polymatrix.hpp"

using namespace cremona;

namespace {

template <class F>
std::uint64_t count_and_check(const F& f, int n) {
  std::set<std::vector<std::uint64_t>> seen;
  PointEnumerator<F> e(f, n, 10'000'000);
  ProjPoint<typename F::Element> pt;
  while (e.next(pt)) {
    std::vector<std::uint64_t> key;
    std::size_t lead = 0;
    while (f.is_zero(pt.x[lead])) ++lead;
    CHECK(pt.x[lead] == f.one());
    for (const auto& c : pt.x) key.push_back(f.index_of(c));
    CHECK(seen.insert(key).second);
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("points") {
  TEST_CASE("enumeration counts") {
    CHECK(count_and_check(PrimeField(2), 1) == 3);
    CHECK(count_and_check(PrimeField(3), 4) == 121);
    CHECK(count_and_check(GaloisField(FieldCfg::extension(2, 2)), 2) == 21);
    CHECK(projective_point_count(2, 4) == 21);
    CHECK(projective_point_count(4, 3) == 121);
  }

  TEST_CASE("enumeration respects the budget") {
    PrimeField f(101);
    CHECK_THROWS_AS(PointEnumerator<PrimeField>(f, 4, 1000), Error);
  }

  TEST_CASE("twisted cubic has q+1 points over F_q") {
    const Ring ring{5, 4, MonoOrder::Grevlex};
    auto x = [&](int i) { return Poly::var(ring, i); };
    const PolyMatrix m(ring, {{x(0), x(1), x(2)}, {x(1), x(2), x(3)}});
    const auto eqs = minors(m, 2);
    for (int e = 1; e <= 3; ++e) {
      GaloisField f(FieldCfg::extension(5, e));
      std::uint64_t count = 0;
      for (const auto& pt : enumerate_projective_points(f, 3, 10'000'000)) {
        bool on = true;
        for (const auto& g : eqs) on = on && f.is_zero(evaluate(f, g, pt));
        count += on;
      }
      CHECK(count == f.size() + 1);
    }
  }

  TEST_CASE("make_point normalizes") {
    PrimeField f(7);
    const auto a = make_point(f, std::vector<std::uint32_t>{0, 3, 6});
    CHECK(a.x == std::vector<std::uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(make_point(f, std::vector<std::uint32_t>{0, 0}), Error);
    CHECK(point_to_string(f, a) == "(0:1:2)");
  }
}
