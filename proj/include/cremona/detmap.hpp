#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/linalg.hpp"
#include "cremona/points.hpp"
#include "cremona/polymatrix.hpp"
#include "cremona/zerodim.hpp"

namespace cremona {

using Point = ProjPoint<std::uint32_t>;

/// phi = (F_0 : ... : F_n) from the maximal minors of an (n+1) x n matrix A(x) of
/// linear forms on P^m, with the flip matrix B(y) satisfying A(x)^t y = B(y) x.
class DetMap {
 public:
  /// ShapeError for a malformed A; IdentityFailure if the flip does not check out.
  static DetMap build(const PolyMatrix& a);

  const PolyMatrix& A() const noexcept { return a_; }
  const PolyMatrix& B() const noexcept { return b_; }
  const std::vector<Poly>& minors() const noexcept { return minors_; }
  int source_dim() const noexcept { return a_.ring().nvars - 1; }
  int target_dim() const noexcept { return a_.cols(); }
  const Ring& source_ring() const noexcept { return a_.ring(); }
  const Ring& target_ring() const noexcept { return b_.ring(); }
  /// Ideal of X^1, generated by the minors.
  Ideal base_ideal() const { return Ideal(source_ring(), minors_); }

  /// B(y) with entries in F_p.
  Matrix<std::uint32_t> flip_at(const Point& y) const;

 private:
  PolyMatrix a_, b_;
  std::vector<Poly> minors_;
};

/// Exact check of A(x)^t y = B(y) x in k[x, y].
bool bilinear_identity_holds(const PolyMatrix& a, const PolyMatrix& b);

/// A map given by an explicit list of forms of one degree.
class SystemMap {
 public:
  explicit SystemMap(std::vector<Poly> forms);
  const std::vector<Poly>& forms() const noexcept { return forms_; }
  const Ring& ring() const noexcept { return forms_.front().ring(); }
  int source_dim() const noexcept { return ring().nvars - 1; }
  int target_dim() const noexcept { return static_cast<int>(forms_.size()) - 1; }
  Ideal base_ideal() const { return Ideal(ring(), forms_); }

 private:
  std::vector<Poly> forms_;
};

/// Image point; BasePoint error when every form vanishes.
Point eval(const std::vector<Poly>& forms, const Point& p);
inline Point eval(const DetMap& map, const Point& p) { return eval(map.minors(), p); }
inline Point eval(const SystemMap& map, const Point& p) { return eval(map.forms(), p); }

/// Projective linear subspace of P^m cut out by reduced echelon equations.
struct LinearSubspace {
  int ambient = 0;
  Matrix<std::uint32_t> equations;
  /// Spanning vectors (kernel basis of the equations).
  std::vector<std::vector<std::uint32_t>> basis;
  int dim() const noexcept { return static_cast<int>(basis.size()) - 1; }
  /// Linear forms of the equations as polynomials in the given ring.
  std::vector<Poly> equation_forms(const Ring& ring) const;
  /// Parametrization x = sum_j u_j basis[j] as images of x_k in k[u_0..u_dim].
  std::vector<Poly> parametrization(std::uint32_t p) const;
  bool operator==(const LinearSubspace& o) const {
    return ambient == o.ambient && equations == o.equations;
  }
};

/// Subspace with the given equations (rows of coefficients, reduced to echelon form).
LinearSubspace subspace_from_equations(std::uint32_t p, int ambient,
                                       const std::vector<std::vector<long long>>& rows);
/// Span of vectors.
LinearSubspace subspace_span(std::uint32_t p, int ambient,
                             const std::vector<std::vector<std::uint32_t>>& vectors);

struct FiberReport {
  Point target;
  int rank = 0;
  LinearSubspace fiber;
  /// Ideal of fiber intersect X^1 in the fiber's own coordinates.
  Ideal intersection;
  std::optional<HilbertData> intersection_hilbert;
};

FiberReport fiber(const DetMap& map, const Point& y, const Budget& budget = {});

struct RankStratum {
  int rank_bound = 0;
  Ideal ideal;
  std::optional<HilbertData> hilbert;
  /// Present when the stratum is zero dimensional.
  std::optional<ZeroDimSolution> points;
};

/// Stratum {y : rank B(y) <= r}; 1 <= r < n.
RankStratum rank_stratum(const DetMap& map, int r, Rng& rng, const Budget& budget = {});

/// Exhaustive scan of P^n(F_q) for targets of rank at most r (field may be an extension).
template <FiniteFieldLike F>
std::vector<ProjPoint<typename F::Element>> enumerate_stratum(const DetMap& map, int r, const F& f,
                                                              std::uint64_t budget) {
  std::vector<ProjPoint<typename F::Element>> out;
  PointEnumerator<F> points(f, map.target_dim(), budget);
  ProjPoint<typename F::Element> y;
  const auto& b = map.B();
  Matrix<typename F::Element> m(b.rows(), b.cols(), f.zero());
  while (points.next(y)) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(i, j) = b(i, j).evaluate(f, y.x);
    if (rank(f, m) <= r) out.push_back(y);
  }
  return out;
}

enum class Smoothness { Smooth, SingularAt, Unknown };
const char* to_string(Smoothness s);

struct SmoothnessVerdict {
  Smoothness kind = Smoothness::Unknown;
  std::optional<Point> witness;
  std::string detail;
};

/// Jacobian certificate: Smooth when I plus the expected_codim minors of its
/// Jacobian has no projective zeros. Large Jacobians are compressed by random
/// row and column combinations and their minors replaced by random combinations
/// per degree; both can only enlarge the candidate singular set.
SmoothnessVerdict smoothness_certificate(const Ideal& ideal, int expected_codim, Rng& rng,
                                         const Budget& budget = {});

struct SingularLocus {
  /// Zero set of I plus the Jacobian minors (a superset of Sing V(I) when compressed).
  ZeroDimSolution candidates;
  /// Rational candidates where the full Jacobian rank is below the codimension.
  std::vector<Point> singular;
};

/// Singular points of a variety with finite singular locus; ShapeError when the
/// candidate set is positive dimensional.
SingularLocus singular_points(const Ideal& ideal, int expected_codim, Rng& rng,
                              const Budget& budget = {});

/// Rank of the Jacobian of the generators at a point.
int jacobian_rank_at(const std::vector<Poly>& gens, const Point& p);

/// Random F_p points of V(I), found on random complementary linear slices.
std::vector<Point> sample_points(const Ideal& ideal, int count, Rng& rng,
                                 const Budget& budget = {}, int max_attempts = 0);

/// h^0(I(d)) as the dimension of the degree-d part of the ideal.
long long linear_system_dim(const Ideal& ideal, int d, const Budget& budget = {});
/// h^0 of the degree-d forms vanishing on the points (interpolation).
long long linear_system_dim(const std::vector<Point>& points, int nvars, std::uint32_t p, int d);
/// Interpolation route on sampled points; InsufficientPoints when sampling fails.
long long linear_system_dim_sampled(const Ideal& ideal, int d, Rng& rng,
                                    const Budget& budget = {});

/// Local fiber dimension m - rank J(p) + 1 of a form system at p.
int fiber_dim_at(const SystemMap& map, const Point& p);
/// Tangent directions of the fiber through p: {v : J(p) v in span F(p)}.
LinearSubspace fiber_tangent(const SystemMap& map, const Point& p);
/// Ideal of V(I) restricted to a linear subspace, in its own coordinates.
Ideal restrict_to(const Ideal& ideal, const LinearSubspace& space);
/// True when every form restricted to the subspace is a multiple of its value at p.
bool is_contracted(const SystemMap& map, const Point& p, const LinearSubspace& space);

/// max over samples of rank(J_F(p) restricted to T_p) - 1.
int image_dim_estimate(const SystemMap& map, const std::optional<Ideal>& restricted_to,
                       int samples, Rng& rng, const Budget& budget = {});

struct BirationalityVerdict {
  enum Kind { BirationalEvidence, FiberDim, Inconclusive } kind = Inconclusive;
  int fiber_dim = 0;
  int trials = 0;
  std::uint32_t prime = 0;
};

BirationalityVerdict birationality_probe(const DetMap& map, int trials, Rng& rng);

/// True iff rank B(phi(p)) < n; BasePoint when p lies on X^1.
bool exceptional_membership(const DetMap& map, const Point& p);

/// Uniformly random point of P^m(F_p).
Point random_point(std::uint32_t p, int m, Rng& rng);

}  // namespace cremona
