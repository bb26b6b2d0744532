#pragma once

#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, int rows, int cols);
  PolyMatrix(Ring ring, std::vector<std::vector<Poly>> entries);
  /// Linear-form matrix from integer coefficient data: rows x cols x nvars.
  static PolyMatrix from_linear_data(Ring ring,
                                     const std::vector<std::vector<std::vector<long long>>>& data);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Ring& ring() const noexcept { return ring_; }
  const Poly& operator()(int i, int j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(int i, int j) { return entries_[i * cols_ + j]; }

  /// Every entry has degree at most 1 and no constant part.
  bool is_linear_form() const;
  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix without_row(int i) const;
  PolyMatrix substitute(const std::vector<Poly>& images) const;

  /// Determinant by cofactor expansion over column subsets.
  Poly det_laplace() const;
  /// Determinant by fraction-free (Bareiss) elimination with exact division.
  Poly det_bareiss() const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  Ring ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

/// F_i = (-1)^i det(M without row i); M must have rows = cols + 1.
std::vector<Poly> max_minors(const PolyMatrix& m);
/// All k x k minors, rows and columns in lexicographic subset order.
std::vector<Poly> minors(const PolyMatrix& m, int k);
/// Jacobian: one row per polynomial, one column per variable.
PolyMatrix jacobian(const std::vector<Poly>& polys);

}  // namespace cremona
