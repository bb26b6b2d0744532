#include <doctest.h>

#include <set>

#include "cremona/gallery.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/invariants.hpp"

using namespace cremona;

namespace {

// Standard monomials of degree d, counted one by one.
long long brute_hilbert_function(const std::vector<Monomial>& gens, int nvars, int d) {
  long long count = 0;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool standard = true;
    for (const auto& g : gens) standard = standard && !divides(g, m);
    count += standard;
  }
  return count;
}

Monomial random_monomial(int nvars, int deg, Rng& rng) {
  Monomial m;
  for (int k = 0; k < deg; ++k) {
    ++m.e[rng() % nvars];
    ++m.deg;
  }
  return m;
}

}  // namespace

TEST_SUITE("hilbert") {
  TEST_CASE("Hilbert function of monomial ideals matches brute force") {
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
      const int nvars = 2 + static_cast<int>(rng() % 4);
      std::vector<Monomial> gens;
      const int ngens = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < ngens; ++i) gens.push_back(random_monomial(nvars, 1 + static_cast<int>(rng() % 4), rng));
      const auto h = hilbert_from_numerator(hilbert_numerator(gens, nvars), nvars);
      for (int d = 0; d <= 9; ++d) CHECK(h.hilbert_function(d) == brute_hilbert_function(gens, nvars, d));
      // in high degree the function is the polynomial
      for (int d = 14; d <= 16; ++d)
        CHECK(Rational(h.hilbert_function(d)) == h.hilbert_polynomial_at(d));
    }
  }

  TEST_CASE("Hilbert-Burch invariants") {
    struct Row { int m, n, dim; long long degree, genus; };
    for (const Row r : {Row{4, 3, 2, 6, 3}, Row{4, 4, 2, 10, 11}, Row{5, 4, 3, 10, 11}, Row{5, 5, 3, 15, 26}}) {
      INFO("m=" << r.m << " n=" << r.n);
      const auto h = hilbert_burch_hp(r.m, r.n);
      CHECK(h.projective_dimension == r.dim);
      CHECK(h.degree == r.degree);
      CHECK(h.sectional_genus == r.genus);
    }
    CHECK_THROWS_AS(hilbert_burch_hp(2, 3), Error);
  }

  TEST_CASE("Hilbert-Burch polynomial agrees with the Groebner route") {
    Rng rng(6);
    for (int n : {3, 4}) {
      const Ring ring{101, 5, MonoOrder::Grevlex};
      const auto a = random_small_matrix(ring, n, rng);
      const auto gb = groebner_basis(Ideal(ring, minors(a, n)));
      CHECK(hilbert_data(gb).hilbert_polynomial == hilbert_burch_hp(4, n).hilbert_polynomial);
    }
  }

  TEST_CASE("resolution of a linked surface") {
    const ResolutionSpec spec{4, {{{4, 6}}, {{5, 6}}, {{6, 1}}}};
    const auto h = resolution_hp(spec);
    CHECK(h.projective_dimension == 2);
    CHECK(h.degree == 9);
    CHECK(h.sectional_genus == 8);
    const auto whole = resolution_hp(ResolutionSpec{3, {}});
    CHECK(whole.projective_dimension == 3);
    CHECK(whole.degree == 1);
    CHECK_THROWS_AS(resolution_hp(ResolutionSpec{-1, {}}), Error);
  }

  TEST_CASE("points have no sectional genus") {
    // two points of P^2, ideal (x2, x0*x1): numerator (1-t)(1-t^2)
    const auto h = hilbert_from_numerator({1, -1, -1, 1}, 3);
    CHECK(h.projective_dimension == 0);
    CHECK(h.degree == 2);
    CHECK_FALSE(h.sectional_genus.has_value());
    CHECK_THROWS_AS(sectional_genus(h), Error);
  }
}
