#include "cremona/zerodim.hpp"

#include <algorithm>

namespace cremona {

namespace {

template <FieldLike F>
using Mat = Matrix<typename F::Element>;

template <FieldLike F>
Mat<F> lift_matrix(const F& f, const Matrix<std::uint32_t>& m) {
  Mat<F> r(m.rows, m.cols, f.zero());
  for (std::size_t i = 0; i < m.data.size(); ++i) r.data[i] = f.from_int(m.data[i]);
  return r;
}

/// Point attached to an eigenvalue of the generic matrix: coordinate i is the
/// unique eigenvalue of M_i on the generalized eigenspace.
template <FieldLike F>
std::vector<typename F::Element> point_coordinates(const F& f, const std::vector<Mat<F>>& mult,
                                                   const Mat<F>& t, typename F::Element lambda) {
  const int n = t.rows;
  Mat<F> shifted = t;
  for (int i = 0; i < n; ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
  Mat<F> power = shifted;
  for (int k = 1; k < n; k *= 2) power = multiply(f, power, power);
  const auto basis = kernel(f, power);
  const int k = static_cast<int>(basis.size());
  if (k == 0) throw Error(ErrorKind::IdentityFailure, "eigenvalue without eigenspace");
  if (k % static_cast<int>(f.characteristic()) == 0)
    throw Error(ErrorKind::Range, "point multiplicity divisible by the characteristic");
  // K: n x k; choose k independent rows to solve K X = M K
  Mat<F> kt(k, n, f.zero());
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) kt(c, r) = basis[c][r];
  Mat<F> echelon = kt;
  const auto rows = rref(f, echelon);
  Mat<F> ksub(k, k, f.zero());
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) ksub(a, c) = basis[c][rows[a]];
  const Mat<F> kinv = inverse(f, ksub);
  const auto kinv_k = f.inv(f.from_int(k));
  std::vector<typename F::Element> coords;
  for (const auto& m : mult) {
    typename F::Element trace = f.zero();
    // trace of X = K_sub^{-1} (M K)_sub
    Mat<F> mk_sub(k, k, f.zero());
    for (int c = 0; c < k; ++c) {
      const auto col = apply(f, m, basis[c]);
      for (int a = 0; a < k; ++a) mk_sub(a, c) = col[rows[a]];
    }
    const auto x = multiply(f, kinv, mk_sub);
    for (int a = 0; a < k; ++a) trace = f.add(trace, x(a, a));
    coords.push_back(f.mul(trace, kinv_k));
  }
  return coords;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lms, int nvars, int d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool in_ideal = false;
    for (const auto& l : lms)
      if (divides(l, m)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) out.push_back(m);
  }
  return out;
}

}  // namespace

ZeroDimSolution solve_zero_dim(const Ideal& ideal, Rng& rng, const Budget& budget) {
  const Ring ring = ideal.ring();
  const PrimeField F(ring.p);
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  const auto h = hilbert_data(gb);
  ZeroDimSolution sol;
  if (h.projective_dimension < 0) return sol;
  if (h.projective_dimension > 0)
    throw Error(ErrorKind::Shape, "scheme has dimension " + std::to_string(h.projective_dimension));
  sol.length = h.degree;
  const int n = ring.nvars;
  const auto lms = gb.leading_monomials();
  int start = static_cast<int>(h.numerator.size());
  for (const auto& g : gb.basis) start = std::max(start, g.degree());

  for (int d = start; d < start + 6; ++d) {
    const auto low = standard_monomials(lms, n, d);
    const auto high = standard_monomials(lms, n, d + 1);
    if (static_cast<long long>(low.size()) != sol.length ||
        static_cast<long long>(high.size()) != sol.length)
      continue;
    const int len = static_cast<int>(sol.length);
    // column j of X_i: normal form of x_i * low[j] in the basis `high`
    std::vector<Matrix<std::uint32_t>> xs;
    for (int v = 0; v < n; ++v) {
      Matrix<std::uint32_t> x(len, len, 0);
      for (int j = 0; j < len; ++j) {
        const Poly nf = normal_form(Poly::monomial(ring, low[j] * Monomial::var(v)), gb.basis);
        for (const auto& t : nf.terms()) {
          const auto it = std::find(high.begin(), high.end(), t.m);
          x(static_cast<int>(it - high.begin()), j) = t.c;
        }
      }
      xs.push_back(std::move(x));
    }
    for (int attempt = 0; attempt < 5; ++attempt) {
      Matrix<std::uint32_t> hm(len, len, 0);
      for (int v = 0; v < n; ++v) {
        const auto c = F.random(rng);
        for (std::size_t k = 0; k < hm.data.size(); ++k)
          hm.data[k] = F.add(hm.data[k], F.mul(c, xs[v].data[k]));
      }
      if (rank(F, hm) < len) continue;
      const auto hinv = inverse(F, hm);
      sol.mult.clear();
      for (int v = 0; v < n; ++v) sol.mult.push_back(multiply(F, hinv, xs[v]));
      if (n >= 2 &&
          !(multiply(F, sol.mult[0], sol.mult[1]) == multiply(F, sol.mult[1], sol.mult[0])))
        break;  // degree too low for the quotient to be saturated
      // generic combinations: keep the one separating the most points
      int best = -1;
      for (int trial = 0; trial < 4; ++trial) {
        Matrix<std::uint32_t> t(len, len, 0);
        for (int v = 0; v < n; ++v) {
          const auto c = F.random(rng);
          for (std::size_t k = 0; k < t.data.size(); ++k)
            t.data[k] = F.add(t.data[k], F.mul(c, sol.mult[v].data[k]));
        }
        const UPoly g = charpoly(F, t);
        const UPoly sq = upoly::squarefree_part(F, g);
        if (sq.degree() > best) {
          best = sq.degree();
          sol.generic = t;
          sol.generic_charpoly = g;
        }
      }
      const UPoly sq = upoly::squarefree_part(F, sol.generic_charpoly);
      sol.geometric_points = sq.degree();
      sol.residue_degrees = upoly::distinct_degree_factorization(F, sq);
      for (auto lambda : upoly::roots(F, sq)) {
        auto coords = point_coordinates(F, sol.mult, sol.generic, lambda);
        auto pt = make_point(F, coords);
        for (const auto& g : ideal.gens())
          if (g.evaluate(F, pt.x) != 0)
            throw Error(ErrorKind::IdentityFailure, "solver produced a non-zero of the ideal");
        sol.rational_points.push_back(std::move(pt));
      }
      std::sort(sol.rational_points.begin(), sol.rational_points.end());
      return sol;
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "no regular degree found for the multiplication maps");
}

std::vector<ProjPoint<GfElement>> extension_points(const ZeroDimSolution& sol, const Ideal& ideal,
                                                   const GaloisField& field,
                                                   std::uint64_t budget) {
  std::vector<ProjPoint<GfElement>> out;
  if (sol.length == 0) return out;
  if (field.size() > budget)
    throw Error(ErrorKind::BudgetExceeded, "extension field too large to search");
  const UPoly sq = upoly::squarefree_part(field.prime_field(), sol.generic_charpoly);
  std::vector<Matrix<GfElement>> mult;
  for (const auto& m : sol.mult) mult.push_back(lift_matrix(field, m));
  const auto t = lift_matrix(field, sol.generic);
  for (std::uint64_t k = 0; k < field.size(); ++k) {
    const auto lambda = field.element_at(k);
    if (!field.is_zero(upoly::eval_in(field, sq, lambda))) continue;
    auto pt = make_point(field, point_coordinates(field, mult, t, lambda));
    for (const auto& g : ideal.gens())
      if (!field.is_zero(g.evaluate(field, pt.x)))
        throw Error(ErrorKind::IdentityFailure, "solver produced a non-zero of the ideal");
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long predicted_point_count(const ZeroDimSolution& sol, int e) {
  long long total = 0;
  for (const auto& [d, count] : sol.residue_degrees)
    if (e % d == 0) total += static_cast<long long>(d) * count;
  return total;
}

}  // namespace cremona
