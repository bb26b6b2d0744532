#include "cremona/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace cremona {

namespace {

using Accumulator = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

std::vector<Term> drain(const Accumulator& acc, std::uint32_t p) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    const auto r = static_cast<std::uint32_t>(c % p);
    if (r) out.push_back({m, r});
  }
  return out;
}

}  // namespace

Poly::Poly(Ring ring, std::vector<Term> terms) : ring_(ring) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring_.compare(a.m, b.m) > 0; });
  const PrimeField F = ring_.field();
  for (auto& t : terms) {
    t.c %= ring_.p;
    if (!terms_.empty() && terms_.back().m == t.m)
      terms_.back().c = F.add(terms_.back().c, t.c);
    else
      terms_.push_back(t);
    if (terms_.back().c == 0) terms_.pop_back();
  }
}

Poly Poly::constant(Ring ring, std::int64_t c) {
  Poly r(ring);
  const auto v = ring.field().from_int(c);
  if (v) r.terms_.push_back({Monomial{}, v});
  return r;
}

Poly Poly::var(Ring ring, int i) {
  if (i < 0 || i >= ring.nvars) throw Error(ErrorKind::Arity, "variable index out of range");
  return monomial(ring, Monomial::var(i));
}

Poly Poly::monomial(Ring ring, const Monomial& m, std::uint32_t c) {
  Poly r(ring);
  c %= ring.p;
  if (c) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::linear(Ring ring, const std::vector<std::int64_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ring.nvars)
    throw Error(ErrorKind::Arity, "linear form has wrong number of coefficients");
  std::vector<Term> terms;
  const PrimeField F = ring.field();
  for (int k = 0; k < ring.nvars; ++k) {
    const auto c = F.from_int(coeffs[k]);
    if (c) terms.push_back({Monomial::var(k), c});
  }
  return Poly(ring, std::move(terms));
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

std::uint32_t Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

Poly Poly::operator+(const Poly& o) const { return sub_mul(ring_.p - 1, Monomial{}, o); }

Poly Poly::operator-(const Poly& o) const { return sub_mul(1, Monomial{}, o); }

Poly Poly::operator-() const { return scale(ring_.p - 1); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
  if (o.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  Accumulator acc;
  acc.reserve(size() * o.size());
  const std::uint64_t p = ring_.p;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.m * b.m];
      slot = (slot + std::uint64_t(a.c) * b.c) % p;
    }
  return Poly(ring_, drain(acc, ring_.p));
}

Poly Poly::scale(std::uint32_t c) const {
  c %= ring_.p;
  Poly r(ring_);
  if (c == 0) return r;
  const PrimeField F = ring_.field();
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = F.mul(t.c, c);
  return r;
}

Poly Poly::mul_term(const Monomial& m, std::uint32_t c) const {
  c %= ring_.p;
  Poly r(ring_);
  if (c == 0) return r;
  const PrimeField F = ring_.field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
  return r;
}

Poly Poly::sub_mul(std::uint32_t c, const Monomial& m, const Poly& g) const {
  const PrimeField F = ring_.field();
  c %= ring_.p;
  if (c == 0 || g.is_zero()) return *this;
  const std::uint32_t negc = F.neg(c);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    const Monomial gm = g.terms_[j].m * m;
    const int cmp = i == terms_.size() ? -1 : ring_.compare(terms_[i].m, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, F.mul(negc, g.terms_[j++].c)});
    } else {
      const auto v = F.add(terms_[i].c, F.mul(negc, g.terms_[j].c));
      if (v) r.terms_.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(ring_.field().inv(lead_coeff()));
}

Poly Poly::derivative(int var) const {
  const PrimeField F = ring_.field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    const auto c = F.mul(t.c, F.from_int(t.m.e[var]));
    if (!c) continue;
    Monomial m = t.m;
    --m.e[var];
    --m.deg;
    out.push_back({m, c});
  }
  // dividing by a variable keeps the relative order of the survivors
  Poly r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::component(int degree) const {
  Poly r(ring_);
  for (const auto& t : terms_)
    if (t.m.deg == degree) r.terms_.push_back(t);
  return r;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const PrimeField F = ring_.field();
  const auto inv_lead = F.inv(d.lead_coeff());
  Poly rem = *this;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    if (!divides(d.lead_monomial(), rem.lead_monomial()))
      throw Error(ErrorKind::IdentityFailure, "inexact polynomial division");
    const Monomial m = quotient(rem.lead_monomial(), d.lead_monomial());
    const auto c = F.mul(rem.lead_coeff(), inv_lead);
    q.push_back({m, c});
    rem = rem.sub_mul(c, m, d);
  }
  Poly r(ring_);
  r.terms_ = std::move(q);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != ring_.nvars)
    throw Error(ErrorKind::Arity, "substitution needs one image per variable");
  if (images.empty()) return *this;
  const Ring target = images.front().ring();
  std::vector<std::vector<Poly>> powers(ring_.nvars);
  auto power = [&](int v, int k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };
  Accumulator acc;
  const std::uint64_t p = target.p;
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.c);
    for (int v = 0; v < ring_.nvars && !prod.is_zero(); ++v)
      if (t.m.e[v]) prod = prod * power(v, t.m.e[v]);
    for (const auto& u : prod.terms_) {
      auto& slot = acc[u.m];
      slot = (slot + u.c) % p;
    }
  }
  return Poly(target, drain(acc, target.p));
}

Poly Poly::in_ring(Ring target, int offset) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.deg = t.m.deg;
    for (int i = 0; i < ring_.nvars; ++i) {
      if (!t.m.e[i]) continue;
      if (i + offset >= target.nvars || i + offset < 0)
        throw Error(ErrorKind::Arity, "variable does not exist in target ring");
      m.e[i + offset] = t.m.e[i];
    }
    out.push_back({m, t.c});
  }
  return Poly(target, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const PrimeField F = ring_.field();
  std::string s;
  for (const auto& t : terms_) {
    std::int64_t c = F.to_signed(t.c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    c = c < 0 ? -c : c;
    std::string mono;
    for (int i = 0; i < ring_.nvars; ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty())
      s += std::to_string(c);
    else if (c == 1)
      s += mono;
    else
      s += std::to_string(c) + "*" + mono;
  }
  return s;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial{});
    return out;
  }
  // descending grevlex: last exponent ascending, then recursively
  Monomial cur;
  cur.deg = static_cast<std::uint16_t>(degree);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == 0) {
      cur.e[0] = static_cast<std::uint8_t>(remaining);
      out.push_back(cur);
      cur.e[0] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur.e[var] = static_cast<std::uint8_t>(k);
      self(self, var - 1, remaining - k);
    }
    cur.e[var] = 0;
  };
  rec(rec, nvars - 1, degree);
  return out;
}

Poly parse_poly(Ring ring, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
  const PrimeField F = ring.field();
  std::vector<Term> terms;
  std::size_t i = 0;
  auto read_int = [&]() -> std::int64_t {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw Error(ErrorKind::Parse, "expected integer in '" + text + "'");
    return std::stoll(s.substr(start, i - start));
  };
  while (i < s.size()) {
    bool negative = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') negative = !negative;
      ++i;
    }
    std::uint32_t c = 1;
    Monomial m;
    bool first = true;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (!first) {
        if (s[i] != '*') throw Error(ErrorKind::Parse, "expected '*' in '" + text + "'");
        ++i;
      }
      first = false;
      if (i < s.size() && s[i] == 'x') {
        ++i;
        const auto v = read_int();
        if (v >= ring.nvars) throw Error(ErrorKind::Arity, "variable x" + std::to_string(v));
        std::int64_t k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          k = read_int();
        }
        m.e[v] = static_cast<std::uint8_t>(m.e[v] + k);
        m.deg = static_cast<std::uint16_t>(m.deg + k);
      } else {
        c = F.mul(c, F.from_int(read_int()));
      }
    }
    if (first) throw Error(ErrorKind::Parse, "dangling sign in '" + text + "'");
    terms.push_back({m, negative ? F.neg(c) : c});
  }
  return Poly(ring, std::move(terms));
}

}  // namespace cremona
