#pragma once

#include <optional>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/groebner.hpp"

namespace cremona {

/// Hilbert series Q(t) / (1-t)^D of S/I, with everything derived from it.
struct HilbertData {
  /// Numerator after cancelling all (1-t) factors; Q(1) != 0 unless the ideal is irrelevant.
  std::vector<long long> numerator;
  int pole_order = 0;
  /// Hilbert polynomial in the power basis, constant term first.
  std::vector<Rational> hilbert_polynomial;
  int projective_dimension = -1;
  long long degree = 0;
  /// Defined when projective_dimension >= 1.
  std::optional<long long> sectional_genus;

  /// Value of the Hilbert function in degree d.
  long long hilbert_function(int d) const;
  /// Value of the Hilbert polynomial at t.
  Rational hilbert_polynomial_at(long long t) const;
};

/// Numerator of the Hilbert series of S/(monomials) over (1-t)^nvars.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars);

/// Hilbert data from a raw numerator over (1-t)^nvars.
HilbertData hilbert_from_numerator(std::vector<long long> numerator, int nvars);

/// IncompleteBasis when the basis was truncated.
HilbertData hilbert_data(const GroebnerBasis& gb);

/// Genus read from the curve section of the Hilbert polynomial; DimensionTooLow below 1.
long long sectional_genus(const HilbertData& h);

/// Polynomial helpers on rational power-basis coefficient vectors.
std::vector<Rational> difference(const std::vector<Rational>& f);
Rational eval_rational_poly(const std::vector<Rational>& f, const Rational& t);
/// Binomial C(t + k, k) as a polynomial in t (shifted by s: C(t - s + k, k)).
std::vector<Rational> binomial_poly(int k, long long shift);

}  // namespace cremona
