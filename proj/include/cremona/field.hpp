#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cremona {

using Rng = std::mt19937_64;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);
std::uint32_t next_prime(std::uint32_t n);

/// Interface shared by every coefficient field used in dense linear algebra,
/// point enumeration and evaluation.
template <class F>
concept FieldLike = requires(const F& f, typename F::Element a, typename F::Element b,
                             std::int64_t i) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(i) } -> std::same_as<typename F::Element>;
  { f.add(a, b) } -> std::same_as<typename F::Element>;
  { f.sub(a, b) } -> std::same_as<typename F::Element>;
  { f.mul(a, b) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// A finite field that can be enumerated element by element.
template <class F>
concept FiniteFieldLike = FieldLike<F> && requires(const F& f, std::uint64_t k,
                                                   typename F::Element a) {
  { f.size() } -> std::same_as<std::uint64_t>;
  { f.element_at(k) } -> std::same_as<typename F::Element>;
  { f.index_of(a) } -> std::same_as<std::uint64_t>;
};

/// Z/pZ with p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;
  bool is_zero(Element a) const noexcept { return a == 0; }

  Element element_at(std::uint64_t k) const noexcept { return static_cast<Element>(k); }
  std::uint64_t index_of(Element a) const noexcept { return a; }
  Element random(Rng& rng) const { return static_cast<Element>(rng() % p_); }
  Element random_nonzero(Rng& rng) const { return static_cast<Element>(1 + rng() % (p_ - 1)); }

  /// Representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Description of a coefficient field: F_p, F_{p^e} or Q (characteristic 0).
struct FieldCfg {
  std::uint32_t characteristic = 0;
  int extension_degree = 1;
  /// Monic modulus, low degree first, size extension_degree+1; empty when degree is 1.
  std::vector<std::uint32_t> modulus;

  static FieldCfg prime(std::uint32_t p);
  /// F_{p^e} defined by the smallest monic irreducible polynomial of degree e,
  /// ordering coefficient vectors by their base-p integer encoding.
  static FieldCfg extension(std::uint32_t p, int degree);
  static FieldCfg rationals() { return FieldCfg{}; }

  bool is_finite() const noexcept { return characteristic != 0; }
  std::uint64_t order() const;
  void validate() const;

  bool operator==(const FieldCfg&) const = default;
};

struct GfElement {
  std::array<std::uint32_t, 4> c{};
  friend bool operator==(const GfElement&, const GfElement&) = default;
  friend auto operator<=>(const GfElement&, const GfElement&) = default;
};

/// F_{p^e} = F_p[t]/(modulus), e <= 4, elements as coefficient vectors in t.
class GaloisField {
 public:
  using Element = GfElement;

  explicit GaloisField(const FieldCfg& cfg);

  std::uint32_t characteristic() const noexcept { return base_.characteristic(); }
  int degree() const noexcept { return e_; }
  std::uint64_t size() const noexcept { return q_; }
  const PrimeField& prime_field() const noexcept { return base_; }
  const FieldCfg& config() const noexcept { return cfg_; }

  Element zero() const noexcept { return {}; }
  Element one() const noexcept {
    Element r;
    r.c[0] = 1;
    return r;
  }
  Element from_int(std::int64_t v) const noexcept { return embed(base_.from_int(v)); }
  Element embed(PrimeField::Element a) const noexcept {
    Element r;
    r.c[0] = a;
    return r;
  }
  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;
  bool is_zero(Element a) const noexcept { return a == Element{}; }
  bool in_prime_field(Element a) const noexcept;

  Element element_at(std::uint64_t k) const noexcept;
  std::uint64_t index_of(Element a) const noexcept;
  Element random(Rng& rng) const { return element_at(rng() % q_); }
  std::string to_string(Element a) const;

 private:
  FieldCfg cfg_;
  PrimeField base_;
  int e_;
  std::uint64_t q_;
};

/// Q with arbitrary-precision, always reduced fractions.
class RationalField {
 public:
  using Element = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(v); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return a == 0; }
  std::string to_string(const Element& a) const { return a.str(); }
};

}  // namespace cremona
