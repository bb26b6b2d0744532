#pragma once

#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

/// Dense row-major matrix of field elements.
template <class E>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<E> data;

  Matrix() = default;
  Matrix(int r, int c, E fill) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}
  E& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const E& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

template <FieldLike F>
Matrix<typename F::Element> identity(const F& f, int n) {
  Matrix<typename F::Element> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <FieldLike F>
std::vector<int> rref(const F& f, Matrix<typename F::Element>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (int j = col; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldLike F>
int rank(const F& f, Matrix<typename F::Element> m) {
  return static_cast<int>(rref(f, m).size());
}

/// Null-space basis in reduced echelon form: one vector per free column, with a
/// 1 in that column and zeros in the other free columns.
template <FieldLike F>
std::vector<std::vector<typename F::Element>> kernel(const F& f, Matrix<typename F::Element> m) {
  const auto pivots = rref(f, m);
  std::vector<int> pivot_row(m.cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<typename F::Element>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<typename F::Element> v(m.cols, f.zero());
    v[free] = f.one();
    for (int c = 0; c < m.cols; ++c)
      if (pivot_row[c] >= 0) v[c] = f.neg(m(pivot_row[c], free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldLike F>
std::vector<typename F::Element> apply(const F& f, const Matrix<typename F::Element>& m,
                                       const std::vector<typename F::Element>& v) {
  std::vector<typename F::Element> out(m.rows, f.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
  return out;
}

template <FieldLike F>
Matrix<typename F::Element> multiply(const F& f, const Matrix<typename F::Element>& a,
                                     const Matrix<typename F::Element>& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::Shape, "matrix product shape mismatch");
  Matrix<typename F::Element> r(a.rows, b.cols, f.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(a(i, k), b(k, j)));
    }
  return r;
}

template <FieldLike F>
typename F::Element det(const F& f, Matrix<typename F::Element> m) {
  if (m.rows != m.cols) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  auto d = f.one();
  for (int col = 0; col < m.cols; ++col) {
    int sel = -1;
    for (int i = col; i < m.rows; ++i)
      if (!f.is_zero(m(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) return f.zero();
    if (sel != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (int i = col + 1; i < m.rows; ++i) {
      if (f.is_zero(m(i, col))) continue;
      const auto factor = f.mul(m(i, col), inv);
      for (int j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return d;
}

/// Inverse of a square matrix; ShapeError when singular.
template <FieldLike F>
Matrix<typename F::Element> inverse(const F& f, const Matrix<typename F::Element>& m) {
  if (m.rows != m.cols) throw Error(ErrorKind::Shape, "inverse of a non-square matrix");
  const int n = m.rows;
  Matrix<typename F::Element> aug(n, 2 * n, f.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(f, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Shape, "matrix is singular");
  Matrix<typename F::Element> r(n, n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

/// Characteristic polynomial det(tI - M) over F_p via Hessenberg reduction.
UPoly charpoly(const PrimeField& f, Matrix<std::uint32_t> m);

}  // namespace cremona
