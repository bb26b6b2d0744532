#include "cremona/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace cremona {

UPoly UPoly::x() { return UPoly{{0, 1}}; }

UPoly UPoly::constant(std::uint32_t c) {
  UPoly r;
  if (c != 0) r.coeffs.push_back(c);
  return r;
}

namespace upoly {

void trim(UPoly& f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = F.add(r.coeffs[i], b.coeffs[i]);
  trim(r);
  return r;
}

UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = F.sub(r.coeffs[i], b.coeffs[i]);
  trim(r);
  return r;
}

UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const PrimeField& F, const UPoly& a, std::uint32_t c) {
  UPoly r = a;
  for (auto& x : r.coeffs) x = F.mul(x, c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  UPoly rem = a;
  if (rem.degree() < b.degree()) return {UPoly{}, rem};
  UPoly quo;
  quo.coeffs.assign(rem.degree() - b.degree() + 1, 0);
  const auto inv_lead = F.inv(b.lead());
  for (int i = rem.degree(); i >= b.degree(); --i) {
    const auto c = F.mul(rem.coeffs[i], inv_lead);
    if (c == 0) continue;
    const int shift = i - b.degree();
    quo.coeffs[shift] = c;
    for (int j = 0; j <= b.degree(); ++j)
      rem.coeffs[shift + j] = F.sub(rem.coeffs[shift + j], F.mul(c, b.coeffs[j]));
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly monic(const PrimeField& F, const UPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly derivative(const PrimeField& F, const UPoly& a) {
  UPoly r;
  if (a.coeffs.size() <= 1) return r;
  r.coeffs.resize(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    r.coeffs[i - 1] = F.mul(a.coeffs[i], F.from_int(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

UPoly powmod(const PrimeField& F, const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result = mod(F, UPoly::constant(1), m);
  UPoly b = mod(F, base, m);
  while (e) {
    if (e & 1) result = mod(F, mul(F, result, b), m);
    b = mod(F, mul(F, b, b), m);
    e >>= 1;
  }
  return result;
}

std::uint32_t eval(const PrimeField& F, const UPoly& a, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

namespace {

// x^(p^k) mod m, by k successive p-th powers.
UPoly frobenius_power(const PrimeField& F, const UPoly& m, int k) {
  UPoly h = mod(F, UPoly::x(), m);
  for (int i = 0; i < k; ++i) h = powmod(F, h, F.characteristic(), m);
  return h;
}

void split_linear(const PrimeField& F, const UPoly& f, Rng& rng, std::vector<std::uint32_t>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(F.neg(F.mul(f.coeffs[0], F.inv(f.coeffs[1]))));
    return;
  }
  const std::uint32_t p = F.characteristic();
  if (p == 2 || p <= 1024) {
    for (std::uint32_t x = 0; x < p; ++x)
      if (eval(F, f, x) == 0) out.push_back(x);
    return;
  }
  for (;;) {
    UPoly shifted{{F.random(rng), 1}};
    UPoly h = powmod(F, shifted, (p - 1) / 2, f);
    h = sub(F, h, UPoly::constant(1));
    UPoly g = gcd(F, h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(F, g, rng, out);
      split_linear(F, divmod(F, f, g).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint32_t> roots(const PrimeField& F, const UPoly& a) {
  std::vector<std::uint32_t> out;
  if (a.degree() <= 0) return out;
  UPoly f = monic(F, a);
  UPoly xp = frobenius_power(F, f, 1);
  UPoly g = gcd(F, sub(F, xp, UPoly::x()), f);
  Rng rng(0x5eed);
  split_linear(F, g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UPoly squarefree_part(const PrimeField& F, const UPoly& a) {
  if (a.degree() <= 0) return UPoly::constant(1);
  UPoly f = monic(F, a);
  UPoly d = derivative(F, f);
  const std::uint32_t p = F.characteristic();
  if (d.is_zero()) {
    // f(x) = h(x^p) = h(x)^p over F_p
    UPoly h;
    for (std::size_t i = 0; i < f.coeffs.size(); i += p) h.coeffs.push_back(f.coeffs[i]);
    trim(h);
    return squarefree_part(F, h);
  }
  UPoly g = gcd(F, f, d);
  UPoly w = divmod(F, f, g).first;
  if (g.degree() <= 0) return monic(F, w);
  UPoly rg = squarefree_part(F, g);
  UPoly common = gcd(F, w, rg);
  return monic(F, mul(F, w, divmod(F, rg, common).first));
}

std::map<int, int> distinct_degree_factorization(const PrimeField& F, const UPoly& a) {
  std::map<int, int> counts;
  if (a.degree() <= 0) return counts;
  UPoly f = monic(F, a);
  UPoly h = mod(F, UPoly::x(), f);
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(F, h, F.characteristic(), f);
    UPoly g = gcd(F, sub(F, h, UPoly::x()), f);
    if (g.degree() > 0) {
      counts[d] += g.degree() / d;
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
  }
  if (f.degree() > 0) counts[f.degree()] += 1;
  return counts;
}

bool is_irreducible(const PrimeField& F, const UPoly& a) {
  if (a.degree() <= 0) return false;
  if (a.degree() == 1) return true;
  UPoly f = monic(F, a);
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    UPoly h = frobenius_power(F, f, k);
    if (gcd(F, sub(F, h, UPoly::x()), f).degree() > 0) return false;
  }
  return true;
}

}  // namespace upoly
}  // namespace cremona
