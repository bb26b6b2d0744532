#include "cremona/hilbert.hpp"

#include <algorithm>

namespace cremona {

namespace {

using Series = std::vector<long long>;

void add_into(Series& a, const Series& b, long long scale, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (divides(o, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Series numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = minimal_generators(std::move(gens));
  if (gens.empty()) return {1};
  // pairwise coprime generators give a product of (1 - t^deg)
  bool independent = true;
  for (std::size_t a = 0; a < gens.size() && independent; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!coprime(gens[a], gens[b])) {
        independent = false;
        break;
      }
  if (independent) {
    Series s{1};
    for (const auto& g : gens) {
      Series shifted(s.size() + g.deg, 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        shifted[i] += s[i];
        shifted[i + g.deg] -= s[i];
      }
      s = std::move(shifted);
    }
    trim(s);
    return s;
  }
  // pivot on the variable that occurs in the most non-simple generators
  std::vector<int> occurrences(nvars, 0);
  for (const auto& g : gens) {
    int support = 0;
    for (int i = 0; i < nvars; ++i) support += g.e[i] ? 1 : 0;
    if (support < 2) continue;
    for (int i = 0; i < nvars; ++i)
      if (g.e[i]) ++occurrences[i];
  }
  const int var = static_cast<int>(std::max_element(occurrences.begin(), occurrences.end()) -
                                   occurrences.begin());
  // pivot x^e with e the median positive exponent of var
  std::vector<int> exps;
  for (const auto& g : gens) {
    int support = 0;
    for (int i = 0; i < nvars; ++i) support += g.e[i] ? 1 : 0;
    if (support >= 2 && g.e[var]) exps.push_back(g.e[var]);
  }
  std::sort(exps.begin(), exps.end());
  const int e = exps[exps.size() / 2];
  const Monomial pivot = Monomial::var(var, e);
  // N(M) = N(M + pivot) + t^e N(M : pivot)
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    const int k = std::min<int>(q.e[var], e);
    q.e[var] = static_cast<std::uint8_t>(q.e[var] - k);
    q.deg = static_cast<std::uint16_t>(q.deg - k);
    colon.push_back(q);
  }
  Series a = numerator_rec(std::move(with_pivot), nvars);
  const Series b = numerator_rec(std::move(colon), nvars);
  add_into(a, b, 1, e);
  trim(a);
  return a;
}

/// C(a, k) for integer a, as the polynomial value a(a-1)...(a-k+1)/k!.
Rational binom_value(long long a, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(a - i) / Rational(i + 1);
  return r;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  return numerator_rec(std::move(gens), nvars);
}

std::vector<Rational> binomial_poly(int k, long long shift) {
  // prod_{i=1..k} (t - shift + i) / i
  std::vector<Rational> r{Rational(1)};
  for (int i = 1; i <= k; ++i)
    r = poly_mul(r, {Rational(i - shift) / Rational(i), Rational(1) / Rational(i)});
  return r;
}

Rational eval_rational_poly(const std::vector<Rational>& f, const Rational& t) {
  Rational acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Rational> difference(const std::vector<Rational>& f) {
  // f(t) - f(t-1)
  std::vector<Rational> shifted(f.size(), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    // (t-1)^i = sum_j C(i,j) t^j (-1)^{i-j}
    for (std::size_t j = i + 1; j-- > 0;) {
      const Rational term = f[i] * binom_value(static_cast<long long>(i), static_cast<int>(j)) *
                            Rational(((i - j) % 2) ? -1 : 1);
      shifted[j] += term;
    }
  }
  std::vector<Rational> r(f.size(), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] - shifted[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

HilbertData hilbert_from_numerator(std::vector<long long> numerator, int nvars) {
  HilbertData h;
  trim(numerator);
  int D = nvars;
  // divide by (1 - t) while Q(1) = 0
  while (D > 0 && !numerator.empty()) {
    long long at_one = 0;
    for (auto c : numerator) at_one += c;
    if (at_one != 0) break;
    // synthetic division by (1 - t): q_k = sum_{i<=k} a_i
    Series q(numerator.size() - 1, 0);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < numerator.size(); ++k) {
      run += numerator[k];
      q[k] = run;
    }
    numerator = std::move(q);
    trim(numerator);
    --D;
  }
  h.numerator = numerator;
  h.pole_order = D;
  h.projective_dimension = D - 1;
  long long at_one = 0;
  for (auto c : numerator) at_one += c;
  h.degree = D > 0 ? at_one : 0;
  // HP(t) = sum_k q_k C(t - k + D - 1, D - 1)
  std::vector<Rational> hp{Rational(0)};
  if (D > 0) {
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      if (numerator[k] == 0) continue;
      auto b = binomial_poly(D - 1, static_cast<long long>(k));
      if (hp.size() < b.size()) hp.resize(b.size(), Rational(0));
      for (std::size_t i = 0; i < b.size(); ++i) hp[i] += Rational(numerator[k]) * b[i];
    }
  }
  while (hp.size() > 1 && hp.back() == 0) hp.pop_back();
  h.hilbert_polynomial = hp;
  if (h.projective_dimension >= 1) h.sectional_genus = sectional_genus(h);
  return h;
}

long long HilbertData::hilbert_function(int d) const {
  if (d < 0) return 0;
  long long total = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const long long a = d - static_cast<long long>(k);
    if (a < 0) break;
    if (pole_order == 0) {
      if (a == 0) total += numerator[k];
      continue;
    }
    total += numerator[k] *
             static_cast<long long>(
                 boost::multiprecision::numerator(binom_value(a + pole_order - 1, pole_order - 1)));
  }
  return total;
}

Rational HilbertData::hilbert_polynomial_at(long long t) const {
  return eval_rational_poly(hilbert_polynomial, Rational(t));
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
  if (!gb.complete) throw Error(ErrorKind::IncompleteBasis, "basis was truncated by the budget");
  return hilbert_from_numerator(hilbert_numerator(gb.leading_monomials(), gb.ring.nvars),
                                gb.ring.nvars);
}

long long sectional_genus(const HilbertData& h) {
  if (h.projective_dimension < 1)
    throw Error(ErrorKind::DimensionTooLow, "sectional genus needs dimension at least 1");
  auto f = h.hilbert_polynomial;
  for (int i = 1; i < h.projective_dimension; ++i) f = difference(f);
  f.resize(2, Rational(0));
  const Rational g = Rational(1) - f[0];
  return static_cast<long long>(boost::multiprecision::numerator(g));
}

}  // namespace cremona
