#include "cremona/detmap.hpp"

#include <algorithm>
#include <map>

namespace cremona {

namespace {

Matrix<std::uint32_t> evaluate_matrix(const PolyMatrix& m, const PrimeField& f,
                                      const std::vector<std::uint32_t>& x) {
  Matrix<std::uint32_t> r(m.rows(), m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(f, x);
  return r;
}

Matrix<std::uint32_t> jacobian_at(const std::vector<Poly>& gens, const std::vector<std::uint32_t>& x) {
  const Ring ring = gens.front().ring();
  const PrimeField f(ring.p);
  Matrix<std::uint32_t> j(static_cast<int>(gens.size()), ring.nvars, 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int v = 0; v < ring.nvars; ++v)
      j(static_cast<int>(i), v) = gens[i].derivative(v).evaluate(f, x);
  return j;
}

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

DetMap DetMap::build(const PolyMatrix& a) {
  if (a.rows() != a.cols() + 1)
    throw Error(ErrorKind::Shape, "A must be (n+1) x n, got " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()));
  if (!a.is_linear_form()) throw Error(ErrorKind::Shape, "A must consist of linear forms");
  const Ring src = a.ring();
  const int n = a.cols();
  const int m = src.nvars - 1;
  if (m < n) throw Error(ErrorKind::Shape, "source dimension must be at least n");
  DetMap map;
  map.a_ = a;
  map.minors_ = max_minors(a);
  const Ring tgt{src.p, n + 1, MonoOrder::Grevlex};
  const PrimeField f(src.p);
  map.b_ = PolyMatrix(tgt, n, m + 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= m; ++k) {
      std::vector<std::int64_t> coeffs(n + 1, 0);
      for (int i = 0; i <= n; ++i) coeffs[i] = a(i, j).coeff(Monomial::var(k));
      map.b_(j, k) = Poly::linear(tgt, coeffs);
    }
  if (!bilinear_identity_holds(map.a_, map.b_))
    throw Error(ErrorKind::IdentityFailure, "bilinear flip identity failed");
  for (const auto& f_i : map.minors_)
    if (!f_i.is_zero() && (!f_i.is_homogeneous() || f_i.degree() != n))
      throw Error(ErrorKind::IdentityFailure, "minor of unexpected degree");
  return map;
}

bool bilinear_identity_holds(const PolyMatrix& a, const PolyMatrix& b) {
  const Ring src = a.ring();
  const Ring tgt = b.ring();
  const int n = a.cols();
  const int m = src.nvars - 1;
  if (b.rows() != n || b.cols() != m + 1 || tgt.nvars != a.rows())
    throw Error(ErrorKind::Shape, "A and B shapes do not match");
  // A(x)^t y = B(y) x, compared in the ring k[x, y]
  if (src.nvars + tgt.nvars > kMaxVars)
    throw Error(ErrorKind::Shape, "matrix too large for the bilinear identity check");
  const Ring both{src.p, src.nvars + tgt.nvars, MonoOrder::Grevlex};
  for (int j = 0; j < n; ++j) {
    Poly lhs(both), rhs(both);
    for (int i = 0; i <= n; ++i)
      lhs += a(i, j).in_ring(both) * Poly::var(both, src.nvars + i);
    for (int k = 0; k <= m; ++k) rhs += b(j, k).in_ring(both, src.nvars) * Poly::var(both, k);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Matrix<std::uint32_t> DetMap::flip_at(const Point& y) const {
  if (static_cast<int>(y.x.size()) != target_ring().nvars)
    throw Error(ErrorKind::Arity, "target point has wrong arity");
  return evaluate_matrix(b_, PrimeField(target_ring().p), y.x);
}

SystemMap::SystemMap(std::vector<Poly> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorKind::Shape, "empty form system");
  const int d = forms_.front().degree();
  for (const auto& f : forms_) {
    if (f.is_zero()) throw Error(ErrorKind::Shape, "zero form in system");
    if (!f.is_homogeneous() || f.degree() != d)
      throw Error(ErrorKind::Shape, "forms must be homogeneous of one degree");
    if (!(f.ring() == forms_.front().ring())) throw Error(ErrorKind::Shape, "mixed rings");
  }
}

Point eval(const std::vector<Poly>& forms, const Point& p) {
  const PrimeField f(forms.front().ring().p);
  std::vector<std::uint32_t> v;
  for (const auto& g : forms) v.push_back(g.evaluate(f, p.x));
  if (is_zero_vector(f, v)) throw Error(ErrorKind::BasePoint, "point lies in the base locus");
  return make_point(f, std::move(v));
}

std::vector<Poly> LinearSubspace::equation_forms(const Ring& ring) const {
  std::vector<Poly> out;
  for (int i = 0; i < equations.rows; ++i) {
    std::vector<std::int64_t> c(ambient + 1);
    for (int k = 0; k <= ambient; ++k) c[k] = equations(i, k);
    out.push_back(Poly::linear(ring, c));
  }
  return out;
}

std::vector<Poly> LinearSubspace::parametrization(std::uint32_t p) const {
  const Ring r{p, static_cast<int>(basis.size()), MonoOrder::Grevlex};
  std::vector<Poly> images;
  for (int k = 0; k <= ambient; ++k) {
    std::vector<std::int64_t> c;
    for (const auto& v : basis) c.push_back(v[k]);
    images.push_back(Poly::linear(r, c));
  }
  return images;
}

namespace {

LinearSubspace from_equation_matrix(const PrimeField& f, int ambient, Matrix<std::uint32_t> eq) {
  LinearSubspace s;
  s.ambient = ambient;
  const auto pivots = rref(f, eq);
  s.equations = Matrix<std::uint32_t>(static_cast<int>(pivots.size()), ambient + 1, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int k = 0; k <= ambient; ++k) s.equations(static_cast<int>(i), k) = eq(static_cast<int>(i), k);
  s.basis = kernel(f, s.equations);
  return s;
}

}  // namespace

LinearSubspace subspace_from_equations(std::uint32_t p, int ambient,
                                       const std::vector<std::vector<long long>>& rows) {
  const PrimeField f(p);
  Matrix<std::uint32_t> eq(static_cast<int>(rows.size()), ambient + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != ambient + 1)
      throw Error(ErrorKind::Arity, "equation has wrong number of coefficients");
    for (int k = 0; k <= ambient; ++k) eq(static_cast<int>(i), k) = f.from_int(rows[i][k]);
  }
  return from_equation_matrix(f, ambient, std::move(eq));
}

LinearSubspace subspace_span(std::uint32_t p, int ambient,
                             const std::vector<std::vector<std::uint32_t>>& vectors) {
  const PrimeField f(p);
  Matrix<std::uint32_t> span(static_cast<int>(vectors.size()), ambient + 1, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (int k = 0; k <= ambient; ++k) span(static_cast<int>(i), k) = vectors[i][k];
  const auto eqs = kernel(f, span);
  Matrix<std::uint32_t> eq(static_cast<int>(eqs.size()), ambient + 1, 0);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (int k = 0; k <= ambient; ++k) eq(static_cast<int>(i), k) = eqs[i][k];
  return from_equation_matrix(f, ambient, std::move(eq));
}

Ideal restrict_to(const Ideal& ideal, const LinearSubspace& space) {
  const auto images = space.parametrization(ideal.ring().p);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.substitute(images));
  return Ideal(images.front().ring(), std::move(gens));
}

FiberReport fiber(const DetMap& map, const Point& y, const Budget& budget) {
  const PrimeField f(map.source_ring().p);
  FiberReport report;
  report.target = y;
  const auto b = map.flip_at(y);
  report.rank = rank(f, b);
  report.fiber = from_equation_matrix(f, map.source_dim(), b);
  report.intersection = restrict_to(map.base_ideal(), report.fiber);
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(report.intersection, opt);
  if (gb.complete) report.intersection_hilbert = hilbert_data(gb);
  return report;
}

RankStratum rank_stratum(const DetMap& map, int r, Rng& rng, const Budget& budget) {
  if (r < 1 || r >= map.target_dim())
    throw Error(ErrorKind::Range, "rank bound must satisfy 1 <= r < n");
  RankStratum s;
  s.rank_bound = r;
  s.ideal = Ideal(map.target_ring(), minors(map.B(), r + 1));
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(s.ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "stratum Groebner budget exhausted");
  s.hilbert = hilbert_data(gb);
  if (s.hilbert->projective_dimension <= 0) s.points = solve_zero_dim(s.ideal, rng, budget);
  return s;
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "Smooth";
    case Smoothness::SingularAt: return "SingularAt";
    case Smoothness::Unknown: return "Unknown";
  }
  return "?";
}

int jacobian_rank_at(const std::vector<Poly>& gens, const Point& p) {
  if (gens.empty()) return 0;
  return rank(PrimeField(gens.front().ring().p), jacobian_at(gens, p.x));
}

Point random_point(std::uint32_t p, int m, Rng& rng) {
  const PrimeField f(p);
  while (true) {
    std::vector<std::uint32_t> v(m + 1);
    for (auto& c : v) c = f.random(rng);
    if (!is_zero_vector(f, v)) return make_point(f, std::move(v));
  }
}

std::vector<Point> sample_points(const Ideal& ideal, int count, Rng& rng, const Budget& budget,
                                 int max_attempts) {
  const Ring ring = ideal.ring();
  const PrimeField f(ring.p);
  const int m = ring.nvars - 1;
  if (max_attempts <= 0) max_attempts = 40 + 20 * count;
  std::vector<Point> out;
  if (ideal.gens().empty()) {
    while (static_cast<int>(out.size()) < count) out.push_back(random_point(ring.p, m, rng));
    return out;
  }
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  const int d = hilbert_data(gb).projective_dimension;
  if (d < 0) return out;
  if (d == 0) {
    // finitely many points: no slicing needed
    for (const auto& pt : solve_zero_dim(ideal, rng, budget).rational_points) {
      if (static_cast<int>(out.size()) >= count) break;
      out.push_back(pt);
    }
    return out;
  }
  const int k = m - d + 1;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    std::vector<std::vector<std::uint32_t>> w(k, std::vector<std::uint32_t>(m + 1));
    Matrix<std::uint32_t> wm(k, m + 1, 0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i <= m; ++i) wm(j, i) = w[j][i] = f.random(rng);
    if (rank(f, wm) < k) continue;
    LinearSubspace slice;
    slice.ambient = m;
    slice.basis = w;
    const Ideal restricted = restrict_to(ideal, slice);
    ZeroDimSolution sol;
    try {
      sol = solve_zero_dim(restricted, rng, budget);
    } catch (const Error&) {
      continue;  // special slice: positive dimensional or degenerate
    }
    for (const auto& u : sol.rational_points) {
      std::vector<std::uint32_t> x(m + 1, 0);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i <= m; ++i) x[i] = f.add(x[i], f.mul(u.x[j], w[j][i]));
      const Point pt = make_point(f, x);
      bool on = true;
      for (const auto& g : ideal.gens())
        if (g.evaluate(f, pt.x) != 0) on = false;
      if (on && std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
      if (static_cast<int>(out.size()) >= count) break;
    }
  }
  return out;
}

namespace {

// I plus the c x c minors of its Jacobian. A wide Jacobian is replaced by R J C with
// random R, C of c + dim rows and columns: rank(R J C) <= rank J, so the zero set can
// only grow, and the spurious rank drops have codimension dim + 1 on V(I). R only mixes
// generators of one degree, which keeps the minors homogeneous.
Ideal jacobian_locus(const Ideal& ideal, int c, int dim, Rng& rng, bool& compressed) {
  const Ring ring = ideal.ring();
  const PrimeField f(ring.p);
  const auto& gens = ideal.gens();
  const int g = static_cast<int>(gens.size());
  PolyMatrix j = jacobian(gens);
  compressed = choose(g, c) * choose(ring.nvars, c) > 300;
  if (compressed) {
    const int k = c + std::max(dim, 0);
    auto random_matrix = [&](int rows, int cols) {
      PolyMatrix r(ring, rows, cols);
      for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) r(a, b) = Poly::constant(ring, f.random(rng));
      return r;
    };
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < g; ++i) by_degree[gens[i].degree()].push_back(i);
    if (!ideal.is_homogeneous()) by_degree = {{0, [&] {
      std::vector<int> all(g);
      for (int i = 0; i < g; ++i) all[i] = i;
      return all;
    }()}};
    std::vector<std::vector<Poly>> rows;
    for (const auto& [deg, idx] : by_degree) {
      const int take = std::min(k, static_cast<int>(idx.size()));
      for (int a = 0; a < take; ++a) {
        std::vector<Poly> row(ring.nvars, Poly(ring));
        for (int i : idx) {
          const auto coef = take == static_cast<int>(idx.size()) ? (i == idx[a] ? 1u : 0u) : f.random(rng);
          if (coef == 0) continue;
          for (int v = 0; v < ring.nvars; ++v) row[v] += j(i, v).scale(coef);
        }
        rows.push_back(std::move(row));
      }
    }
    PolyMatrix r(ring, static_cast<int>(rows.size()), ring.nvars);
    for (int a = 0; a < r.rows(); ++a)
      for (int v = 0; v < ring.nvars; ++v) r(a, v) = rows[a][v];
    j = r;
    if (k < ring.nvars) j = j * random_matrix(ring.nvars, k);
  }
  Ideal s = ideal;
  auto all = minors(j, c);
  if (!compressed || !ideal.is_homogeneous()) {
    for (auto& mnr : all) s = s.with(mnr);
    return s;
  }
  // dim + 2 random combinations per degree still cut V(I) down to the common zeros
  std::map<int, std::vector<Poly>> by_degree;
  for (auto& mnr : all)
    if (!mnr.is_zero()) by_degree[mnr.degree()].push_back(std::move(mnr));
  const int take = std::max(dim, 0) + 2;
  for (auto& [deg, ms] : by_degree) {
    if (static_cast<int>(ms.size()) <= take) {
      for (auto& mnr : ms) s = s.with(mnr);
      continue;
    }
    for (int t = 0; t < take; ++t) {
      Poly comb(ring);
      for (const auto& mnr : ms) comb += mnr.scale(f.random(rng));
      s = s.with(comb);
    }
  }
  return s;
}

}  // namespace

SmoothnessVerdict smoothness_certificate(const Ideal& ideal, int expected_codim, Rng& rng,
                                         const Budget& budget) {
  SmoothnessVerdict verdict;
  const Ring ring = ideal.ring();
  const PrimeField f(ring.p);
  const auto& gens = ideal.gens();
  const int c = expected_codim;
  if (c < 1 || c >= ring.nvars) throw Error(ErrorKind::Range, "expected codimension out of range");
  if (static_cast<int>(gens.size()) < c) {
    // the Jacobian cannot reach rank c anywhere on V(I)
    const auto pts = sample_points(ideal, 1, rng, budget);
    if (!pts.empty()) {
      verdict.kind = Smoothness::SingularAt;
      verdict.witness = pts.front();
      verdict.detail = "fewer generators than the codimension";
    } else {
      verdict.detail = "no rational point found on a degenerate ideal";
    }
    return verdict;
  }
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) {
    verdict.detail = "Groebner budget exhausted on the ideal";
    return verdict;
  }
  const int dim = hilbert_data(gb).projective_dimension;
  if (dim < 0) {
    verdict.kind = Smoothness::Smooth;
    verdict.detail = "empty variety";
    return verdict;
  }
  for (int attempt = 0; attempt < 3; ++attempt) {
    bool compressed = false;
    const Ideal s = jacobian_locus(ideal, c, dim, rng, compressed);
    const auto empty = certify_projectively_empty(s, budget);
    if (!empty) {
      verdict.detail = "Groebner budget exhausted on the singular-locus ideal";
      return verdict;
    }
    if (*empty) {
      verdict.kind = Smoothness::Smooth;
      verdict.detail = compressed ? "empty after random Jacobian compression" : "Jacobian ideal empty";
      return verdict;
    }
    for (const auto& p : sample_points(s, 3, rng, budget))
      if (jacobian_rank_at(gens, p) < c) {
        verdict.kind = Smoothness::SingularAt;
        verdict.witness = p;
        verdict.detail = "Jacobian rank drops at witness";
        return verdict;
      }
    if (!compressed) break;
  }
  verdict.detail = "singular locus nonempty but no rational witness found";
  return verdict;
}

SingularLocus singular_points(const Ideal& ideal, int expected_codim, Rng& rng,
                              const Budget& budget) {
  const Ring ring = ideal.ring();
  const int c = expected_codim;
  if (c < 1 || c >= ring.nvars) throw Error(ErrorKind::Range, "expected codimension out of range");
  if (static_cast<int>(ideal.gens().size()) < c)
    throw Error(ErrorKind::Shape, "fewer generators than the codimension");
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  bool compressed = false;
  const Ideal s = jacobian_locus(ideal, c, hilbert_data(gb).projective_dimension, rng, compressed);
  SingularLocus out;
  out.candidates = solve_zero_dim(s, rng, budget);
  for (const auto& p : out.candidates.rational_points)
    if (jacobian_rank_at(ideal.gens(), p) < c) out.singular.push_back(p);
  return out;
}

long long linear_system_dim(const Ideal& ideal, int d, const Budget& budget) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::Shape, "ideal must be homogeneous");
  GroebnerOptions opt;
  opt.budget = budget;
  opt.budget.max_degree = std::min(budget.max_degree, d);
  const auto gb = groebner_basis(ideal, opt);
  if (gb.valid_through_degree < d) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  return ideal_dimension_in_degree(gb, d);
}

long long linear_system_dim(const std::vector<Point>& points, int nvars, std::uint32_t p, int d) {
  const auto monos = monomials_of_degree(nvars, d);
  if (points.size() <= monos.size())
    throw Error(ErrorKind::InsufficientPoints, std::to_string(points.size()) + " points for " +
                                                   std::to_string(monos.size()) + " monomials");
  const PrimeField f(p);
  const Ring ring{p, nvars, MonoOrder::Grevlex};
  Matrix<std::uint32_t> ev(static_cast<int>(points.size()), static_cast<int>(monos.size()), 0);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
      ev(static_cast<int>(i), static_cast<int>(j)) = Poly::monomial(ring, monos[j]).evaluate(f, points[i].x);
  return static_cast<long long>(monos.size()) - rank(f, ev);
}

long long linear_system_dim_sampled(const Ideal& ideal, int d, Rng& rng, const Budget& budget) {
  const int n = ideal.ring().nvars;
  const int want = static_cast<int>(monomial_count(n, d)) + 10;
  const auto pts = sample_points(ideal, want, rng, budget, 60 * want);
  if (static_cast<int>(pts.size()) < want)
    throw Error(ErrorKind::InsufficientPoints, "sampled only " + std::to_string(pts.size()) + " points");
  return linear_system_dim(pts, n, ideal.ring().p, d);
}

int fiber_dim_at(const SystemMap& map, const Point& p) {
  eval(map, p);  // BasePoint check
  const int r = jacobian_rank_at(map.forms(), p);
  return map.source_dim() - r + 1;
}

LinearSubspace fiber_tangent(const SystemMap& map, const Point& p) {
  const Point y = eval(map, p);
  const PrimeField f(map.ring().p);
  const auto j = jacobian_at(map.forms(), p.x);
  const int m = map.source_dim();
  Matrix<std::uint32_t> aug(j.rows, m + 2, 0);
  for (int i = 0; i < j.rows; ++i) {
    for (int k = 0; k <= m; ++k) aug(i, k) = j(i, k);
    aug(i, m + 1) = f.neg(y.x[i]);
  }
  std::vector<std::vector<std::uint32_t>> dirs;
  for (auto& v : kernel(f, aug)) {
    v.pop_back();
    if (!is_zero_vector(f, v)) dirs.push_back(std::move(v));
  }
  return subspace_span(f.characteristic(), m, dirs);
}

bool is_contracted(const SystemMap& map, const Point& p, const LinearSubspace& space) {
  const Point y = eval(map, p);
  const auto images = space.parametrization(map.ring().p);
  std::vector<Poly> restricted;
  for (const auto& g : map.forms()) restricted.push_back(g.substitute(images));
  std::size_t i0 = 0;
  while (y.x[i0] == 0) ++i0;
  // y is normalized with y[i0] = 1, so c(u) = F_{i0}(u)
  const Poly& c = restricted[i0];
  for (std::size_t i = 0; i < restricted.size(); ++i)
    if (!(restricted[i] == c.scale(y.x[i]))) return false;
  return true;
}

int image_dim_estimate(const SystemMap& map, const std::optional<Ideal>& restricted_to,
                       int samples, Rng& rng, const Budget& budget) {
  const PrimeField f(map.ring().p);
  const int m = map.source_dim();
  std::vector<Point> pts;
  if (restricted_to) {
    pts = sample_points(*restricted_to, samples * 2, rng, budget);
  } else {
    for (int i = 0; i < samples * 2; ++i) pts.push_back(random_point(f.characteristic(), m, rng));
  }
  int best = -2, used = 0;
  for (const auto& p : pts) {
    if (used >= samples) break;
    bool base = true;
    for (const auto& g : map.forms())
      if (g.evaluate(f, p.x) != 0) base = false;
    if (base) continue;
    ++used;
    const auto jf = jacobian_at(map.forms(), p.x);
    Matrix<std::uint32_t> composed = jf;
    if (restricted_to && !restricted_to->gens().empty()) {
      const auto tangent = kernel(f, jacobian_at(restricted_to->gens(), p.x));
      Matrix<std::uint32_t> t(m + 1, static_cast<int>(tangent.size()), 0);
      for (std::size_t c = 0; c < tangent.size(); ++c)
        for (int k = 0; k <= m; ++k) t(k, static_cast<int>(c)) = tangent[c][k];
      composed = multiply(f, jf, t);
    }
    best = std::max(best, rank(f, composed) - 1);
  }
  if (used == 0) throw Error(ErrorKind::InsufficientPoints, "no sample points off the base locus");
  return best;
}

BirationalityVerdict birationality_probe(const DetMap& map, int trials, Rng& rng) {
  BirationalityVerdict v;
  const std::uint32_t p = map.source_ring().p;
  const PrimeField f(p);
  v.prime = p;
  std::map<int, int> dims;
  int self_only = 0;
  for (int t = 0; t < trials * 3 && v.trials < trials; ++t) {
    const Point x = random_point(p, map.source_dim(), rng);
    Point y;
    try {
      y = eval(map, x);
    } catch (const Error&) {
      continue;
    }
    ++v.trials;
    const auto b = map.flip_at(y);
    const int k = map.source_dim() - rank(f, b);
    ++dims[k];
    if (k == 0) {
      // the one-dimensional kernel must be spanned by x itself
      if (is_zero_vector(f, apply(f, b, x.x))) ++self_only;
    }
  }
  if (v.trials == 0) return v;
  const auto mode = std::max_element(dims.begin(), dims.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  if (mode->first == 0) {
    if (self_only == mode->second) v.kind = BirationalityVerdict::BirationalEvidence;
  } else {
    v.kind = BirationalityVerdict::FiberDim;
    v.fiber_dim = mode->first;
  }
  return v;
}

bool exceptional_membership(const DetMap& map, const Point& p) {
  const Point y = eval(map, p);
  return rank(PrimeField(map.source_ring().p), map.flip_at(y)) < map.target_dim();
}

}  // namespace cremona
