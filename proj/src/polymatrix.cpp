#include "cremona/polymatrix.hpp"

#include <map>

namespace cremona {

PolyMatrix::PolyMatrix(Ring ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring)) {}

PolyMatrix::PolyMatrix(Ring ring, std::vector<std::vector<Poly>> entries)
    : ring_(ring), rows_(static_cast<int>(entries.size())),
      cols_(entries.empty() ? 0 : static_cast<int>(entries[0].size())) {
  for (auto& row : entries) {
    if (static_cast<int>(row.size()) != cols_) throw Error(ErrorKind::Shape, "ragged matrix");
    for (auto& e : row) {
      if (!(e.ring() == ring)) throw Error(ErrorKind::Shape, "entries from different rings");
      entries_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::from_linear_data(
    Ring ring, const std::vector<std::vector<std::vector<long long>>>& data) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : data) {
    std::vector<Poly> r;
    for (const auto& form : row)
      r.push_back(Poly::linear(ring, std::vector<std::int64_t>(form.begin(), form.end())));
    rows.push_back(std::move(r));
  }
  return PolyMatrix(ring, std::move(rows));
}

bool PolyMatrix::is_linear_form() const {
  for (const auto& e : entries_)
    for (const auto& t : e.terms())
      if (t.m.deg != 1) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Shape, "matrix product shape mismatch");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Poly acc(ring_);
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = acc;
    }
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix r(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
  return r;
}

PolyMatrix PolyMatrix::without_row(int i) const {
  std::vector<int> rs, cs;
  for (int k = 0; k < rows_; ++k)
    if (k != i) rs.push_back(k);
  for (int k = 0; k < cols_; ++k) cs.push_back(k);
  return submatrix(rs, cs);
}

PolyMatrix PolyMatrix::substitute(const std::vector<Poly>& images) const {
  const Ring target = images.empty() ? ring_ : images.front().ring();
  PolyMatrix r(target, rows_, cols_);
  for (int i = 0; i < rows_ * cols_; ++i) r.entries_[i] = entries_[i].substitute(images);
  return r;
}

Poly PolyMatrix::det_laplace() const {
  if (rows_ != cols_) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return Poly::constant(ring_, 1);
  // minors of the last k rows indexed by column mask
  std::map<unsigned, Poly> prev;
  for (int j = 0; j < n; ++j) prev.emplace(1u << j, (*this)(n - 1, j));
  for (int row = n - 2; row >= 0; --row) {
    std::map<unsigned, Poly> next;
    for (const auto& [mask, minor] : prev) {
      if (minor.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        const Poly& a = (*this)(row, j);
        if (a.is_zero()) continue;
        // sign: number of used columns left of j
        const int before = __builtin_popcount(mask & ((1u << j) - 1));
        Poly term = a * minor;
        if (before % 2) term = -term;
        auto it = next.find(mask | (1u << j));
        if (it == next.end())
          next.emplace(mask | (1u << j), std::move(term));
        else
          it->second += term;
      }
    }
    prev = std::move(next);
  }
  auto it = prev.find((1u << n) - 1);
  return it == prev.end() ? Poly(ring_) : it->second;
}

Poly PolyMatrix::det_bareiss() const {
  if (rows_ != cols_) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return Poly::constant(ring_, 1);
  std::vector<Poly> a = entries_;
  auto at = [&](int i, int j) -> Poly& { return a[i * n + j]; };
  Poly prev_pivot = Poly::constant(ring_, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!at(i, k).is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return Poly(ring_);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).exact_div(prev_pivot);
    prev_pivot = at(k, k);
  }
  return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

std::vector<Poly> max_minors(const PolyMatrix& m) {
  if (m.rows() != m.cols() + 1)
    throw Error(ErrorKind::Shape, "maximal minors need rows = cols + 1, got " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::vector<Poly> out;
  for (int i = 0; i < m.rows(); ++i) {
    Poly d = m.without_row(i).det_laplace();
    out.push_back(i % 2 ? -d : d);
  }
  return out;
}

namespace {

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, int k) {
  if (k < 1 || k > m.rows() || k > m.cols()) throw Error(ErrorKind::Shape, "minor size out of range");
  std::vector<std::vector<int>> rs, cs;
  subsets(m.rows(), k, rs);
  subsets(m.cols(), k, cs);
  std::vector<Poly> out;
  for (const auto& r : rs)
    for (const auto& c : cs) out.push_back(m.submatrix(r, c).det_laplace());
  return out;
}

PolyMatrix jacobian(const std::vector<Poly>& polys) {
  if (polys.empty()) throw Error(ErrorKind::Shape, "jacobian of an empty list");
  const Ring ring = polys.front().ring();
  PolyMatrix j(ring, static_cast<int>(polys.size()), ring.nvars);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (int v = 0; v < ring.nvars; ++v) j(static_cast<int>(i), v) = polys[i].derivative(v);
  return j;
}

}  // namespace cremona
