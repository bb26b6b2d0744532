#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/monomial.hpp"

namespace cremona {

/// Polynomial ring F_p[x_0..x_{n-1}] with a fixed monomial order.
struct Ring {
  std::uint32_t p = 101;
  int nvars = 0;
  MonoOrder order = MonoOrder::Grevlex;

  PrimeField field() const { return PrimeField(p); }
  int compare(const Monomial& a, const Monomial& b) const {
    return cremona::compare(a, b, order, nvars);
  }
  bool operator==(const Ring&) const = default;
};

struct Term {
  Monomial m;
  std::uint32_t c;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms sorted strictly descending in the ring order, no zero
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(ring) {}
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Poly(Ring ring, std::vector<Term> terms);

  static Poly constant(Ring ring, std::int64_t c);
  static Poly var(Ring ring, int i);
  static Poly monomial(Ring ring, const Monomial& m, std::uint32_t c = 1);
  /// Linear form sum_k coeffs[k] x_k with integer coefficients reduced mod p.
  static Poly linear(Ring ring, const std::vector<std::int64_t>& coeffs);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  std::uint32_t lead_coeff() const { return terms_.front().c; }
  /// Maximum total degree; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  std::uint32_t coeff(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

  Poly scale(std::uint32_t c) const;
  Poly mul_term(const Monomial& m, std::uint32_t c) const;
  /// this - c*m*g, a single merge pass.
  Poly sub_mul(std::uint32_t c, const Monomial& m, const Poly& g) const;
  Poly monic() const;
  Poly derivative(int var) const;
  /// Homogeneous component of the given degree.
  Poly component(int degree) const;
  /// Exact division; throws if the division leaves a remainder.
  Poly exact_div(const Poly& d) const;

  /// Replace variable k by images[k] (all in a common target ring).
  Poly substitute(const std::vector<Poly>& images) const;
  /// Same polynomial in a ring with another order or more trailing variables.
  Poly in_ring(Ring target, int offset = 0) const;

  /// Evaluation at a point over any field containing F_p.
  template <FieldLike F>
  typename F::Element evaluate(const F& field, const std::vector<typename F::Element>& x) const {
    if (static_cast<int>(x.size()) != ring_.nvars)
      throw Error(ErrorKind::Arity, "point has " + std::to_string(x.size()) +
                                        " coordinates, ring has " + std::to_string(ring_.nvars));
    auto acc = field.zero();
    for (const auto& t : terms_) {
      auto v = field.from_int(t.c);
      for (int i = 0; i < ring_.nvars; ++i)
        for (int k = 0; k < t.m.e[i]; ++k) v = field.mul(v, x[i]);
      acc = field.add(acc, v);
    }
    return acc;
  }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// All monomials of a given degree in n variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Parses sums of terms like "3*x0^2*x1 - x2 + 5" over the ring.
Poly parse_poly(Ring ring, const std::string& text);

}  // namespace cremona
