#pragma once

#include <map>
#include <vector>

#include "cremona/groebner.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/linalg.hpp"
#include "cremona/points.hpp"

namespace cremona {

/// Points of a zero-dimensional projective scheme, read off commuting
/// multiplication matrices on a graded piece of the coordinate ring.
struct ZeroDimSolution {
  /// Length of the scheme (the Hilbert polynomial constant).
  long long length = 0;
  /// Distinct points over the algebraic closure.
  int geometric_points = 0;
  /// Residue degree -> number of closed points with that residue field degree.
  std::map<int, int> residue_degrees;
  /// F_p-rational points, each verified on the generators.
  std::vector<ProjPoint<std::uint32_t>> rational_points;

  /// Multiplication by x_i / h on the degree-D part; T = sum c_i M_i.
  std::vector<Matrix<std::uint32_t>> mult;
  Matrix<std::uint32_t> generic;
  UPoly generic_charpoly;
};

/// Throws Shape when the scheme is positive dimensional.
ZeroDimSolution solve_zero_dim(const Ideal& ideal, Rng& rng, const Budget& budget = {});

/// All F_{p^e} points, found from the roots of the generic characteristic
/// polynomial by exhaustive search over the field (budget bounds its size).
std::vector<ProjPoint<GfElement>> extension_points(const ZeroDimSolution& sol, const Ideal& ideal,
                                                   const GaloisField& field,
                                                   std::uint64_t budget);

/// Number of F_{p^e} points predicted by the residue degrees.
long long predicted_point_count(const ZeroDimSolution& sol, int e);

}  // namespace cremona
