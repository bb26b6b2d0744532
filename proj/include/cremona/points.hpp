#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/poly.hpp"

namespace cremona {

/// Point of P^n; the first nonzero coordinate is 1.
template <class E>
struct ProjPoint {
  std::vector<E> x;

  int dim() const noexcept { return static_cast<int>(x.size()) - 1; }
  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
};

/// Normalizes a nonzero vector; ShapeError for the zero vector.
template <FieldLike F>
ProjPoint<typename F::Element> make_point(const F& f, std::vector<typename F::Element> v) {
  std::size_t lead = 0;
  while (lead < v.size() && f.is_zero(v[lead])) ++lead;
  if (lead == v.size()) throw Error(ErrorKind::Shape, "the zero vector is not a projective point");
  const auto inv = f.inv(v[lead]);
  for (auto& c : v) c = f.mul(c, inv);
  return ProjPoint<typename F::Element>{std::move(v)};
}

template <FieldLike F>
bool is_zero_vector(const F& f, const std::vector<typename F::Element>& v) {
  for (const auto& c : v)
    if (!f.is_zero(c)) return false;
  return true;
}

/// Number of points of P^n(F_q).
std::uint64_t projective_point_count(int n, std::uint64_t q);

/// Streams P^n(F_q) in lexicographic order of normalized coordinates (by element index).
template <FiniteFieldLike F>
class PointEnumerator {
 public:
  PointEnumerator(const F& f, int n, std::uint64_t budget) : f_(f), n_(n) {
    const auto total = projective_point_count(n, f.size());
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " points exceed budget " +
                                                 std::to_string(budget));
    idx_.assign(n + 1, 0);
    lead_ = n;  // start with (0:...:0:1)
  }

  /// Writes the next point; false once exhausted. Order: points with leading
  /// one further left come later, i.e. (0:..:1) < ... < (1:*:..:*) lexicographically.
  bool next(ProjPoint<typename F::Element>& out) {
    if (lead_ < 0) return false;
    out.x.resize(n_ + 1);
    for (int i = 0; i <= n_; ++i) {
      if (i < lead_)
        out.x[i] = f_.zero();
      else if (i == lead_)
        out.x[i] = f_.one();
      else
        out.x[i] = f_.element_at(idx_[i]);
    }
    // advance the free coordinates right of lead_, odometer style with last fastest
    int i = n_;
    while (i > lead_) {
      if (++idx_[i] < f_.size()) break;
      idx_[i] = 0;
      --i;
    }
    if (i == lead_) {
      --lead_;
      std::fill(idx_.begin(), idx_.end(), 0);
    }
    return true;
  }

 private:
  const F& f_;
  int n_;
  int lead_;
  std::vector<std::uint64_t> idx_;
};

template <FiniteFieldLike F>
std::vector<ProjPoint<typename F::Element>> enumerate_projective_points(const F& f, int n,
                                                                        std::uint64_t budget) {
  PointEnumerator<F> e(f, n, budget);
  std::vector<ProjPoint<typename F::Element>> out;
  ProjPoint<typename F::Element> p;
  while (e.next(p)) out.push_back(p);
  return out;
}

/// Lifts F_p coordinates into a field containing F_p.
template <FieldLike F>
std::vector<typename F::Element> lift(const F& f, const std::vector<std::uint32_t>& v) {
  std::vector<typename F::Element> out;
  out.reserve(v.size());
  for (auto c : v) out.push_back(f.from_int(c));
  return out;
}

template <FieldLike F>
typename F::Element evaluate(const F& f, const Poly& poly, const ProjPoint<typename F::Element>& p) {
  return poly.evaluate(f, p.x);
}

template <FieldLike F>
std::string point_to_string(const F& f, const ProjPoint<typename F::Element>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (i) s += ":";
    s += f.to_string(p.x[i]);
  }
  return s + ")";
}

}  // namespace cremona
