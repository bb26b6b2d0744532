#include "cremona/field.hpp"

#include "cremona/error.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime(std::uint32_t n) {
  std::uint32_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) +
                                             " is not a prime below 2^31");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldCfg FieldCfg::prime(std::uint32_t p) {
  FieldCfg cfg{p, 1, {}};
  cfg.validate();
  return cfg;
}

FieldCfg FieldCfg::extension(std::uint32_t p, int degree) {
  if (degree == 1) return prime(p);
  if (degree < 1 || degree > 4)
    throw Error(ErrorKind::InvalidField, "extension degree must lie in 1..4");
  PrimeField F(p);
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    UPoly f;
    f.coeffs.resize(degree + 1);
    std::uint64_t rest = k;
    for (int i = 0; i < degree; ++i) {
      f.coeffs[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f.coeffs[degree] = 1;
    if (f.coeffs[0] == 0) continue;
    if (upoly::is_irreducible(F, f)) return FieldCfg{p, degree, f.coeffs};
  }
  throw Error(ErrorKind::InvalidField, "no irreducible polynomial found");
}

std::uint64_t FieldCfg::order() const {
  if (!is_finite()) throw Error(ErrorKind::InvalidField, "Q has no finite order");
  std::uint64_t q = 1;
  for (int i = 0; i < extension_degree; ++i) q *= characteristic;
  return q;
}

void FieldCfg::validate() const {
  if (characteristic == 0) {
    if (extension_degree != 1 || !modulus.empty())
      throw Error(ErrorKind::InvalidField, "extensions of Q are not supported");
    return;
  }
  PrimeField F(characteristic);
  if (extension_degree < 1 || extension_degree > 4)
    throw Error(ErrorKind::InvalidField, "extension degree must lie in 1..4");
  if (extension_degree == 1) {
    if (!modulus.empty()) throw Error(ErrorKind::InvalidField, "prime field has no modulus");
    return;
  }
  if (static_cast<int>(modulus.size()) != extension_degree + 1 || modulus.back() != 1)
    throw Error(ErrorKind::InvalidField, "modulus must be monic of the extension degree");
  for (auto c : modulus)
    if (c >= characteristic) throw Error(ErrorKind::InvalidField, "modulus not reduced");
  if (!upoly::is_irreducible(F, UPoly{modulus}))
    throw Error(ErrorKind::InvalidField, "modulus is reducible");
}

GaloisField::GaloisField(const FieldCfg& cfg)
    : cfg_(cfg), base_(cfg.characteristic == 0 ? 2 : cfg.characteristic),
      e_(cfg.extension_degree) {
  if (!cfg.is_finite()) throw Error(ErrorKind::InvalidField, "GaloisField needs finite field");
  cfg.validate();
  q_ = cfg.order();
}

GfElement GaloisField::add(Element a, Element b) const noexcept {
  Element r;
  for (int i = 0; i < e_; ++i) r.c[i] = base_.add(a.c[i], b.c[i]);
  return r;
}

GfElement GaloisField::sub(Element a, Element b) const noexcept {
  Element r;
  for (int i = 0; i < e_; ++i) r.c[i] = base_.sub(a.c[i], b.c[i]);
  return r;
}

GfElement GaloisField::neg(Element a) const noexcept {
  Element r;
  for (int i = 0; i < e_; ++i) r.c[i] = base_.neg(a.c[i]);
  return r;
}

GfElement GaloisField::mul(Element a, Element b) const noexcept {
  if (e_ == 1) return embed(base_.mul(a.c[0], b.c[0]));
  const std::uint64_t p = base_.characteristic();
  std::array<std::uint64_t, 8> prod{};
  for (int i = 0; i < e_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a.c[i]) * b.c[j]) % p;
  }
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    const std::uint64_t c = prod[i] % p;
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < e_; ++j)
      prod[i - e_ + j] = (prod[i - e_ + j] + (p - c) * cfg_.modulus[j]) % p;
  }
  Element r;
  for (int i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i] % p);
  return r;
}

GfElement GaloisField::pow(Element a, std::uint64_t e) const noexcept {
  Element result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

GfElement GaloisField::inv(Element a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in extension field");
  return pow(a, q_ - 2);
}

bool GaloisField::in_prime_field(Element a) const noexcept {
  for (int i = 1; i < e_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

GfElement GaloisField::element_at(std::uint64_t k) const noexcept {
  Element r;
  const std::uint64_t p = base_.characteristic();
  for (int i = 0; i < e_; ++i) {
    r.c[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return r;
}

std::uint64_t GaloisField::index_of(Element a) const noexcept {
  std::uint64_t k = 0;
  for (int i = e_ - 1; i >= 0; --i) k = k * base_.characteristic() + a.c[i];
  return k;
}

std::string GaloisField::to_string(Element a) const {
  if (e_ == 1) return std::to_string(a.c[0]);
  std::string s;
  for (int i = e_ - 1; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += std::to_string(a.c[i]);
    if (i >= 1) s += "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Rational RationalField::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("inverse of zero in Q");
  return Rational(1) / a;
}

}  // namespace cremona
