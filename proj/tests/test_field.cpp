#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/univariate.hpp"

using namespace cremona;
using namespace cremona::upoly;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

template <class F>
void check_axioms(const F& f, const std::vector<typename F::Element>& xs) {
  for (const auto& a : xs) {
    CHECK(f.add(a, f.zero()) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.is_zero(f.add(a, f.neg(a))));
    if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    for (const auto& b : xs) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
      const auto c = xs[(xs.size() / 3) % xs.size()];
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    }
  }
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("is_prime agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(32003));
    CHECK(next_prime(100) == 101);
  }

  TEST_CASE("prime field axioms") {
    for (std::uint32_t p : {2u, 3u, 101u, 32003u}) {
      PrimeField f(p);
      Rng rng(p);
      std::vector<std::uint32_t> xs = {0, 1, p - 1};
      for (int i = 0; i < 12; ++i) xs.push_back(f.random(rng));
      check_axioms(f, xs);
    }
  }

  TEST_CASE("symmetric representatives") {
    PrimeField f(101);
    CHECK(f.to_signed(100) == -1);
    CHECK(f.to_signed(50) == 50);
    CHECK(f.to_signed(51) == -50);
    CHECK(f.from_int(-1) == 100);
  }

  TEST_CASE("extension field axioms and Frobenius") {
    for (int e = 1; e <= 3; ++e) {
      GaloisField f(FieldCfg::extension(5, e));
      REQUIRE(f.size() == static_cast<std::uint64_t>(std::pow(5, e)));
      std::vector<GfElement> xs;
      Rng rng(e);
      for (int i = 0; i < 10; ++i) xs.push_back(f.random(rng));
      check_axioms(f, xs);
      // every element is a root of t^q - t, nonzero ones have order dividing q-1
      for (std::uint64_t k = 0; k < f.size(); ++k) {
        const auto a = f.element_at(k);
        CHECK(f.index_of(a) == k);
        CHECK(f.pow(a, f.size()) == a);
        if (!f.is_zero(a)) CHECK(f.pow(a, f.size() - 1) == f.one());
      }
    }
  }

  TEST_CASE("extension modulus is irreducible") {
    for (std::uint32_t p : {2u, 3u, 5u, 101u})
      for (int e = 2; e <= 4; ++e) {
        const auto cfg = FieldCfg::extension(p, e);
        CHECK(cfg.modulus.size() == static_cast<std::size_t>(e + 1));
        CHECK(is_irreducible(PrimeField(p), UPoly{cfg.modulus}));
      }
  }

  TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS_AS(PrimeField(15), Error);
    CHECK_THROWS_AS(FieldCfg::extension(6, 2), Error);
  }

  TEST_CASE("univariate roots and factorization degrees") {
    PrimeField f(7);
    // (t-1)(t-2)(t-3)(t^2+1); t^2+1 is irreducible mod 7
    UPoly a = UPoly::constant(1);
    for (std::uint32_t r : {1u, 2u, 3u}) a = mul(f, a, UPoly{{f.neg(r), 1}});
    a = mul(f, a, UPoly{{1, 0, 1}});
    auto rs = roots(f, a);
    std::sort(rs.begin(), rs.end());
    CHECK(rs == std::vector<std::uint32_t>{1, 2, 3});
    const auto ddf = distinct_degree_factorization(f, a);
    CHECK(ddf.at(1) == 3);
    CHECK(ddf.at(2) == 1);
    const UPoly g = gcd(f, a, mul(f, UPoly{{f.neg(2), 1}}, UPoly{{f.neg(5), 1}}));
    CHECK(g == UPoly{{f.from_int(-2), 1}});
  }
}
