#pragma once

// Regression ideals and a naive division oracle shared by the unit tests and
// the acceptance driver.

#include <string>
#include <utility>
#include <vector>

#include "cremona/detmap.hpp"
#include "cremona/gallery.hpp"
#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/polymatrix.hpp"

namespace cremona::testing {

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};

inline Ideal minors_ideal(const PolyMatrix& m, int k) {
  return Ideal(m.ring(), minors(m, k));
}

inline std::vector<NamedIdeal> regression_ideals(std::uint32_t p) {
  std::vector<NamedIdeal> out;
  const Ring p3{p, 4, MonoOrder::Grevlex};
  auto x = [&](int i) { return Poly::var(p3, i); };
  out.push_back({"twisted cubic",
                 minors_ideal(PolyMatrix(p3, {{x(0), x(1), x(2)}, {x(1), x(2), x(3)}}), 2)});
  out.push_back({"two quadrics",
                 Ideal(p3, {parse_poly(p3, "x0*x1 - x2*x3"), parse_poly(p3, "x0^2 + x1^2 - x2^2 + 3*x3^2")})});
  out.push_back({"inhomogeneous", Ideal(p3, {parse_poly(p3, "x0^2 - x1 + 1"), parse_poly(p3, "x1*x2 - x3^2 - 2"),
                                             parse_poly(p3, "x0*x3 - x2")})});
  const Ring p5{p, 6, MonoOrder::Grevlex};
  out.push_back({"segre", DetMap::build(matrix_from_text(p5, segre_matrix_text())).base_ideal()});
  const Ring p4{p, 5, MonoOrder::Grevlex};
  out.push_back({"todd room", DetMap::build(matrix_from_text(p4, todd_room_matrix_text())).base_ideal()});
  Rng rng(17);
  out.push_back({"random bordiga", minors_ideal(random_small_matrix(p4, 3, rng), 3)});
  const Ring tag{p, 4, MonoOrder::TagElim};
  out.push_back({"tag order", Ideal(tag, {parse_poly(tag, "x0*x1 - x2^2"), parse_poly(tag, "x0*x3 - x1*x2"),
                                          parse_poly(tag, "x1^3 - x3^2*x2")})});
  return out;
}

/// Division by a list, written with nothing but Poly arithmetic.
inline Poly naive_reduce(Poly f, const std::vector<Poly>& g) {
  Poly rem(f.ring());
  const PrimeField field(f.ring().p);
  while (!f.is_zero()) {
    const Term lt = f.terms().front();
    bool divided = false;
    for (const auto& h : g) {
      if (h.is_zero() || !divides(h.lead_monomial(), lt.m)) continue;
      const auto c = field.mul(lt.c, field.inv(h.lead_coeff()));
      f = f - h.mul_term(quotient(lt.m, h.lead_monomial()), c);
      divided = true;
      break;
    }
    if (!divided) {
      rem = rem + Poly::monomial(f.ring(), lt.m, lt.c);
      f = f - Poly::monomial(f.ring(), lt.m, lt.c);
    }
  }
  return rem;
}

inline Poly s_polynomial(const Poly& a, const Poly& b) {
  const PrimeField field(a.ring().p);
  const Monomial l = lcm(a.lead_monomial(), b.lead_monomial());
  return a.mul_term(quotient(l, a.lead_monomial()), field.inv(a.lead_coeff())) -
         b.mul_term(quotient(l, b.lead_monomial()), field.inv(b.lead_coeff()));
}

/// Buchberger's criterion plus generator membership, checked naively.
inline bool is_groebner_basis_of(const std::vector<Poly>& basis, const Ideal& ideal) {
  for (const auto& g : ideal.gens())
    if (!naive_reduce(g, basis).is_zero()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!naive_reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

/// Images of the variables under x -> M x for a random invertible M.
inline std::vector<Poly> random_coordinate_change(const Ring& ring, Rng& rng) {
  const PrimeField f(ring.p);
  for (;;) {
    Matrix<std::uint32_t> m(ring.nvars, ring.nvars, 0);
    for (int i = 0; i < ring.nvars; ++i)
      for (int j = 0; j < ring.nvars; ++j) m(i, j) = f.random(rng);
    if (det(f, m) == 0) continue;
    std::vector<Poly> images;
    for (int i = 0; i < ring.nvars; ++i) {
      std::vector<std::int64_t> c(ring.nvars);
      for (int j = 0; j < ring.nvars; ++j) c[j] = m(i, j);
      images.push_back(Poly::linear(ring, c));
    }
    return images;
  }
}

inline Ideal transform(const Ideal& ideal, const std::vector<Poly>& images) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.substitute(images));
  return Ideal(ideal.ring(), gens);
}

}  // namespace cremona::testing
