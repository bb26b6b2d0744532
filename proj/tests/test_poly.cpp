#include <doctest.h>

#include "cremona/linalg.hpp"
#include "cremona/polymatrix.hpp"

using namespace cremona;

namespace {

Poly random_poly(const Ring& ring, int max_deg, int terms, Rng& rng) {
  const PrimeField f(ring.p);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int d = static_cast<int>(rng() % (max_deg + 1));
    for (int k = 0; k < d; ++k) {
      const int v = static_cast<int>(rng() % ring.nvars);
      ++m.e[v];
      ++m.deg;
    }
    ts.push_back({m, f.random_nonzero(rng)});
  }
  return Poly(ring, ts);
}

std::vector<std::uint32_t> random_vec(const PrimeField& f, int n, Rng& rng) {
  std::vector<std::uint32_t> v(n);
  for (auto& c : v) c = f.random(rng);
  return v;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("ring operations commute with evaluation") {
    const Ring ring{101, 4, MonoOrder::Grevlex};
    const PrimeField f(101);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
      const Poly a = random_poly(ring, 3, 5, rng), b = random_poly(ring, 3, 5, rng);
      const auto x = random_vec(f, 4, rng);
      const auto va = a.evaluate(f, x), vb = b.evaluate(f, x);
      CHECK((a + b).evaluate(f, x) == f.add(va, vb));
      CHECK((a - b).evaluate(f, x) == f.sub(va, vb));
      CHECK((a * b).evaluate(f, x) == f.mul(va, vb));
      CHECK((a * b - b * a).is_zero());
      if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
  }

  TEST_CASE("printing round-trips through the parser") {
    Rng rng(11);
    for (std::uint32_t p : {101u, 32003u}) {
      const Ring ring{p, 6, MonoOrder::Grevlex};
      for (int t = 0; t < 40; ++t) {
        const Poly a = random_poly(ring, 4, 6, rng);
        CHECK(parse_poly(ring, a.to_string()) == a);
      }
    }
    const Ring ring{101, 3, MonoOrder::Grevlex};
    CHECK(parse_poly(ring, "3*x0^2*x1 - x2 + 5").to_string() == "3*x0^2*x1 - x2 + 5");
    CHECK_THROWS_AS(parse_poly(ring, "x7"), Error);
    CHECK_THROWS_AS(parse_poly(ring, "2*+"), Error);
  }

  TEST_CASE("Laplace and Bareiss determinants agree") {
    const Ring ring{101, 5, MonoOrder::Grevlex};
    const PrimeField f(101);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::vector<std::vector<long long>>> data(4, std::vector<std::vector<long long>>(4));
      for (auto& row : data)
        for (auto& entry : row) {
          entry.resize(5);
          for (auto& c : entry) c = static_cast<long long>(rng() % 7) - 3;
        }
      const auto m = PolyMatrix::from_linear_data(ring, data);
      const Poly lap = m.det_laplace();
      CHECK(lap == m.det_bareiss());
      // numeric oracle at a random point
      const auto x = random_vec(f, 5, rng);
      Matrix<std::uint32_t> num(4, 4, 0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) num(i, j) = m(i, j).evaluate(f, x);
      CHECK(lap.evaluate(f, x) == det(f, num));
    }
  }

  TEST_CASE("derivative and substitution") {
    const Ring ring{101, 3, MonoOrder::Grevlex};
    const Poly a = parse_poly(ring, "x0^2*x1 + 2*x1*x2^2");
    CHECK(a.derivative(0) == parse_poly(ring, "2*x0*x1"));
    CHECK(a.derivative(2) == parse_poly(ring, "4*x1*x2"));
    const std::vector<Poly> images = {Poly::var(ring, 1), Poly::var(ring, 0), Poly::var(ring, 2)};
    CHECK(a.substitute(images) == parse_poly(ring, "x1^2*x0 + 2*x0*x2^2"));
    CHECK(a.is_homogeneous());
    CHECK(a.degree() == 3);
  }
}
