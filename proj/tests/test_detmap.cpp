#include <doctest.h>

#include <algorithm>

#include "cremona/detmap.hpp"
#include "cremona/gallery.hpp"

using namespace cremona;

namespace {

std::vector<std::uint32_t> column(const Matrix<std::uint32_t>& m, const std::vector<std::uint32_t>& x,
                                  const PrimeField& f) {
  std::vector<std::uint32_t> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] = f.add(out[i], f.mul(m(i, j), x[j]));
  return out;
}

Matrix<std::uint32_t> numeric(const PolyMatrix& m, const std::vector<std::uint32_t>& x, const PrimeField& f) {
  Matrix<std::uint32_t> out(m.rows(), m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(f, x);
  return out;
}

bool on_zero_set(const std::vector<Poly>& forms, const Point& p, const PrimeField& f) {
  return std::all_of(forms.begin(), forms.end(), [&](const Poly& g) { return g.evaluate(f, p.x) == 0; });
}

DetMap gallery_map(const MatrixText& text, std::uint32_t p, int nvars) {
  return DetMap::build(matrix_from_text(Ring{p, nvars, MonoOrder::Grevlex}, text));
}

}  // namespace

TEST_SUITE("detmap") {
  TEST_CASE("Segre minors by hand") {
    const DetMap map = gallery_map(segre_matrix_text(), 101, 6);
    const auto& a = map.A();
    REQUIRE(a.rows() == 3);
    std::vector<Poly> hand;
    for (int skip = 0; skip < 3; ++skip) {
      std::vector<int> r;
      for (int i = 0; i < 3; ++i)
        if (i != skip) r.push_back(i);
      hand.push_back(a(r[0], 0) * a(r[1], 1) - a(r[0], 1) * a(r[1], 0));
    }
    REQUIRE(map.minors().size() == 3);
    for (int i = 0; i < 3; ++i) CHECK((map.minors()[i] == hand[i] || map.minors()[i] == -hand[i]));
  }

  TEST_CASE("flip identity on random matrices") {
    Rng rng(2024);
    const PrimeField f(101);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const int nvars = n + 1 + static_cast<int>(rng() % 3);
      const Ring ring{101, nvars, MonoOrder::Grevlex};
      const auto a = random_small_matrix(ring, n, rng);
      DetMap map = [&] {
        try {
          return DetMap::build(a);
        } catch (const Error&) {
          return DetMap::build(random_small_matrix(ring, n, rng));
        }
      }();
      CHECK(bilinear_identity_holds(map.A(), map.B()));
      // numeric oracle: y^T A(x) = (B(y) x)^T
      std::vector<std::uint32_t> x(nvars), y(n + 1);
      for (auto& v : x) v = f.random(rng);
      for (auto& v : y) v = f.random(rng);
      const auto ax = numeric(map.A(), x, f);
      const auto by = numeric(map.B(), y, f);
      const auto lhs_rhs = column(by, x, f);
      for (int j = 0; j < n; ++j) {
        std::uint32_t s = 0;
        for (int i = 0; i <= n; ++i) s = f.add(s, f.mul(y[i], ax(i, j)));
        CHECK(s == lhs_rhs[j]);
      }
    }
  }

  TEST_CASE("a wrong flip matrix is rejected") {
    const DetMap map = gallery_map(todd_room_matrix_text(), 101, 5);
    PolyMatrix b = map.B();
    b(0, 0) = b(0, 0) + Poly::var(b.ring(), 1);
    CHECK_FALSE(bilinear_identity_holds(map.A(), b));
  }

  TEST_CASE("fiber and rank duality over F3") {
    for (const auto& [text, nvars] : {std::pair{&segre_matrix_text(), 6}, std::pair{&todd_room_matrix_text(), 5}}) {
      const DetMap map = gallery_map(*text, 3, nvars);
      const PrimeField f(3);
      const int m = map.source_dim();
      // every source point off the base locus lies in the kernel of B at its image
      for (const auto& x : enumerate_projective_points(f, m, 1'000'000)) {
        if (on_zero_set(map.minors(), x, f)) {
          CHECK_THROWS_AS(eval(map, x), Error);
          continue;
        }
        const Point y = eval(map, x);
        for (auto v : column(map.flip_at(y), x.x, f)) CHECK(v == 0);
      }
      // every target fiber is the kernel of B(y), of dimension m - rank
      for (const auto& y : enumerate_projective_points(f, map.target_dim(), 1'000'000)) {
        const auto fr = fiber(map, y);
        const int r = rank(f, map.flip_at(y));
        CHECK(fr.rank == r);
        CHECK(fr.fiber.dim() == m - r);
        for (const auto& v : fr.fiber.basis)
          for (auto c : column(map.flip_at(y), v, f)) CHECK(c == 0);
      }
    }
  }

  TEST_CASE("Segre fibers over F3 are 3-planes meeting X1 in quadrics") {
    const DetMap map = gallery_map(segre_matrix_text(), 3, 6);
    int targets = 0;
    for (const auto& y : enumerate_projective_points(PrimeField(3), 2, 1000)) {
      const auto fr = fiber(map, y);
      CHECK(fr.fiber.dim() == 3);
      REQUIRE(fr.intersection_hilbert);
      CHECK(fr.intersection_hilbert->projective_dimension == 2);
      CHECK(fr.intersection_hilbert->degree == 2);
      ++targets;
    }
    CHECK(targets == 13);
  }

  TEST_CASE("rank stratum point counts over extension fields") {
    // a Bordiga type map over F_3: the rank <= 2 locus is zero dimensional
    const Ring ring{3, 5, MonoOrder::Grevlex};
    Rng rng(31);
    int tested = 0;
    for (int attempt = 0; attempt < 40 && tested < 1; ++attempt) {
      const auto a = random_small_matrix(ring, 3, rng);
      std::optional<DetMap> map;
      std::optional<RankStratum> st;
      try {
        map = DetMap::build(a);
        st = rank_stratum(*map, 2, rng);
      } catch (const Error&) {
        continue;
      }
      if (!st->points || st->points->length != st->points->geometric_points) continue;
      for (int e = 1; e <= 3; ++e) {
        INFO("e=" << e);
        const GaloisField gf(FieldCfg::extension(3, e));
        const auto found = enumerate_stratum(*map, 2, gf, 1'000'000);
        CHECK(static_cast<long long>(found.size()) == predicted_point_count(*st->points, e));
      }
      ++tested;
    }
    CHECK(tested == 1);
  }

  TEST_CASE("Todd-Room stratum and fiber") {
    const DetMap map = gallery_map(todd_room_matrix_text(), 101, 5);
    Rng rng(1);
    const auto st = rank_stratum(map, 2, rng);
    REQUIRE(st.points);
    CHECK(st.points->geometric_points == 1);
    REQUIRE(st.points->rational_points.size() == 1);
    const Point e4 = st.points->rational_points[0];
    CHECK(e4.x == std::vector<std::uint32_t>{0, 0, 0, 0, 1});
    const auto fr = fiber(map, e4);
    CHECK(fr.fiber == subspace_from_equations(101, 4, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    REQUIRE(fr.intersection_hilbert);
    CHECK(fr.intersection_hilbert->degree == 4);
    CHECK(fr.intersection_hilbert->projective_dimension == 1);
  }

  TEST_CASE("smoothness certificates") {
    Rng rng(3);
    const DetMap todd = gallery_map(todd_room_matrix_text(), 101, 5);
    CHECK(smoothness_certificate(todd.base_ideal(), 2, rng).kind == Smoothness::Smooth);
    // square of the ideal of a point in P2
    const Ring ring{101, 3, MonoOrder::Grevlex};
    const auto fat = DetMap::build(matrix_from_text(ring, {{"x0", "0"}, {"x1", "x0"}, {"0", "x1"}}));
    const auto v = smoothness_certificate(fat.base_ideal(), 2, rng);
    CHECK(v.kind == Smoothness::SingularAt);
    REQUIRE(v.witness);
    CHECK(v.witness->x == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(jacobian_rank_at(fat.minors(), *v.witness) == 0);
  }

  TEST_CASE("base points and exceptional membership") {
    const DetMap map = gallery_map(todd_room_matrix_text(), 101, 5);
    Rng rng(5);
    const auto pts = sample_points(map.base_ideal(), 3, rng);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
      try {
        (void)eval(map, p);
        FAIL("expected a base point error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BasePoint);
      }
      CHECK_THROWS_AS(exceptional_membership(map, p), Error);
    }
    // points of the plane x3=x4=0 off X1 are contracted to e4
    const auto plane = subspace_from_equations(101, 4, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    const PrimeField f(101);
    for (int t = 0; t < 5; ++t) {
      std::vector<std::uint32_t> x(5, 0);
      for (const auto& b : plane.basis) {
        const auto c = f.random(rng);
        for (int k = 0; k < 5; ++k) x[k] = f.add(x[k], f.mul(c, b[k]));
      }
      if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) continue;
      const Point p = make_point(f, x);
      if (on_zero_set(map.minors(), p, f)) continue;
      CHECK(eval(map, p).x == std::vector<std::uint32_t>{0, 0, 0, 0, 1});
      CHECK(exceptional_membership(map, p));
    }
  }

  TEST_CASE("malformed matrices") {
    const Ring ring{101, 3, MonoOrder::Grevlex};
    CHECK_THROWS_AS(DetMap::build(matrix_from_text(ring, {{"x0", "x1"}, {"x1", "x2"}})), Error);
    CHECK_THROWS_AS(DetMap::build(matrix_from_text(ring, {{"x0^2", "x1"}, {"x1", "x2"}, {"x0", "x2"}})), Error);
  }
}
