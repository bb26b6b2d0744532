#include <doctest.h>

#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "regression.hpp"

using namespace cremona;
using namespace cremona::testing;

namespace {

Poly random_poly(const Ring& ring, int deg, Rng& rng) {
  const PrimeField f(ring.p);
  std::vector<Term> ts;
  for (int d = 0; d <= deg; ++d)
    for (const auto& m : monomials_of_degree(ring.nvars, d))
      if (rng() % 3 == 0) ts.push_back({m, f.random(rng)});
  return Poly(ring, ts);
}

bool is_reduced(const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].lead_coeff() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        if (divides(basis[j].lead_monomial(), t.m)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("S-pairs reduce to zero on the regression ideals") {
    for (std::uint32_t p : {101u, 32003u})
      for (const auto& r : regression_ideals(p)) {
        INFO(r.name << " p=" << p);
        const auto gb = groebner_basis(r.ideal);
        REQUIRE(gb.complete);
        CHECK(is_groebner_basis_of(gb.basis, r.ideal));
        CHECK(is_reduced(gb.basis));
      }
  }

  TEST_CASE("normal form matches naive division modulo a basis") {
    Rng rng(4);
    for (const auto& r : regression_ideals(101)) {
      INFO(r.name);
      const auto gb = groebner_basis(r.ideal);
      for (int t = 0; t < 10; ++t) {
        const Poly f = random_poly(r.ideal.ring(), 4, rng);
        CHECK(normal_form(f, gb.basis) == naive_reduce(f, gb.basis));
      }
    }
  }

  TEST_CASE("bases are invariant under a change of coordinates") {
    Rng rng(8);
    for (const auto& r : regression_ideals(101)) {
      INFO(r.name);
      const auto images = random_coordinate_change(r.ideal.ring(), rng);
      const auto gb = groebner_basis(r.ideal);
      const auto moved = groebner_basis(transform(r.ideal, images));
      // same ideal from two generating sets gives the same reduced basis
      const auto via_basis = groebner_basis(transform(Ideal(r.ideal.ring(), gb.basis), images));
      CHECK(moved.basis == via_basis.basis);
      if (r.ideal.is_homogeneous() && r.ideal.ring().order == MonoOrder::Grevlex) {
        const auto h0 = hilbert_data(gb), h1 = hilbert_data(moved);
        CHECK(h0.numerator == h1.numerator);
        CHECK(h0.degree == h1.degree);
        CHECK(h0.projective_dimension == h1.projective_dimension);
      }
    }
  }

  TEST_CASE("classical curves") {
    const auto ideals = regression_ideals(101);
    const auto cubic = hilbert_data(groebner_basis(ideals[0].ideal));
    CHECK(cubic.projective_dimension == 1);
    CHECK(cubic.degree == 3);
    CHECK(cubic.sectional_genus == 0);
    const auto elliptic = hilbert_data(groebner_basis(ideals[1].ideal));
    CHECK(elliptic.projective_dimension == 1);
    CHECK(elliptic.degree == 4);
    CHECK(elliptic.sectional_genus == 1);
    CHECK(ideal_dimension_in_degree(groebner_basis(ideals[0].ideal), 2) == 3);
    CHECK(monomial_count(4, 2) == 10);
  }

  TEST_CASE("quotient, intersection and elimination") {
    const Ring ring{101, 3, MonoOrder::Grevlex};
    auto p = [&](const char* s) { return parse_poly(ring, s); };
    const Ideal i(ring, {p("x0*x1"), p("x0*x2")});
    const auto q = ideal_quotient(i, Ideal(ring, {p("x0")}));
    CHECK(groebner_basis(q).basis == std::vector<Poly>{p("x2"), p("x1")});
    const auto meet = intersection(Ideal(ring, {p("x0")}), Ideal(ring, {p("x1")}));
    CHECK(groebner_basis(meet).basis == std::vector<Poly>{p("x0*x1")});

    const Ring tag{101, 4, MonoOrder::TagElim};
    const Ring target{101, 3, MonoOrder::Grevlex};
    const auto gb = groebner_basis(Ideal(tag, {parse_poly(tag, "x0*x1 - x2"), parse_poly(tag, "x0*x2 - x3")}));
    const auto elim = groebner_basis(eliminate_tag(gb, target));
    CHECK(elim.basis == std::vector<Poly>{parse_poly(target, "x1^2 - x0*x2")});
  }

  TEST_CASE("projective emptiness") {
    const auto cubic = regression_ideals(101)[0].ideal;
    CHECK(certify_projectively_empty(cubic) == false);
    const Ring& ring = cubic.ring();
    CHECK(certify_projectively_empty(cubic.with(Poly::var(ring, 0)).with(Poly::var(ring, 3))) == true);
    CHECK_FALSE(projective_emptiness(groebner_basis(cubic)));
  }

  TEST_CASE("budget truncation is reported") {
    const auto todd = regression_ideals(101)[4].ideal;
    GroebnerOptions opt;
    opt.budget.max_pairs = 1;
    const auto gb = groebner_basis(todd, opt);
    CHECK_FALSE(gb.complete);
    CHECK_THROWS_AS(hilbert_data(gb), Error);
    CHECK(certify_projectively_empty(todd.with(Poly::var(todd.ring(), 0)), opt.budget) == std::nullopt);
  }
}
