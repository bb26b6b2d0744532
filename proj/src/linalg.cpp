#include "cremona/linalg.hpp"

namespace cremona {

UPoly charpoly(const PrimeField& f, Matrix<std::uint32_t> m) {
  if (m.rows != m.cols) throw Error(ErrorKind::Shape, "characteristic polynomial of non-square");
  const int n = m.rows;
  // reduce to upper Hessenberg form by similarity transforms
  for (int k = 0; k + 2 <= n; ++k) {
    int sel = -1;
    for (int i = k + 1; i < n; ++i)
      if (m(i, k)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m(i, sel), m(i, k + 1));
    }
    const auto inv = f.inv(m(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      if (!m(i, k)) continue;
      const auto u = f.mul(m(i, k), inv);
      for (int j = 0; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(u, m(k + 1, j)));
      for (int r = 0; r < n; ++r) m(r, k + 1) = f.add(m(r, k + 1), f.mul(u, m(r, i)));
    }
  }
  // p_{k+1}(t) = (t - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    UPoly next = upoly::mul(f, UPoly{{f.neg(m(k, k)), 1}}, p[k]);
    std::uint32_t prod = 1;
    for (int i = k - 1; i >= 0; --i) {
      prod = f.mul(prod, m(i + 1, i));
      if (!prod) break;
      next = upoly::sub(f, next, upoly::scale(f, p[i], f.mul(m(i, k), prod)));
    }
    p[k + 1] = next;
  }
  return p[n];
}

}  // namespace cremona
