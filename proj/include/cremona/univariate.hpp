#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
struct UPoly {
  std::vector<std::uint32_t> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  std::uint32_t lead() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  static UPoly x();
  static UPoly constant(std::uint32_t c);
};

namespace upoly {

void trim(UPoly& f);
UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly scale(const PrimeField& F, const UPoly& a, std::uint32_t c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& F, const UPoly& a);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);
UPoly derivative(const PrimeField& F, const UPoly& a);
UPoly powmod(const PrimeField& F, const UPoly& base, std::uint64_t e, const UPoly& m);
std::uint32_t eval(const PrimeField& F, const UPoly& a, std::uint32_t x);

/// Evaluation of an F_p polynomial at an element of an extension field.
template <FieldLike G>
typename G::Element eval_in(const G& field, const UPoly& a, const typename G::Element& x) {
  auto acc = field.zero();
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it)
    acc = field.add(field.mul(acc, x), field.from_int(*it));
  return acc;
}

/// Distinct roots in F_p, ascending.
std::vector<std::uint32_t> roots(const PrimeField& F, const UPoly& a);
/// Product of the distinct irreducible factors (p-th power parts handled).
UPoly squarefree_part(const PrimeField& F, const UPoly& a);
/// For a squarefree polynomial: residue degree -> number of irreducible factors.
std::map<int, int> distinct_degree_factorization(const PrimeField& F, const UPoly& a);
bool is_irreducible(const PrimeField& F, const UPoly& a);

}  // namespace upoly
}  // namespace cremona
