#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace cremona {

inline constexpr int kMaxVars = 14;

/// Exponent vector with cached total degree; 16 bytes.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Grevlex, or the tag order used for elimination of variable 0: compare the
/// degree in the remaining variables, then the exponent of variable 0, then grevlex.
enum class MonoOrder { Grevlex, TagElim };

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  r.deg = static_cast<std::uint16_t>(b.deg - a.deg);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Returns >0 when a > b, 0 when equal, <0 when a < b.
inline int compare(const Monomial& a, const Monomial& b, MonoOrder order, int nvars) {
  if (order == MonoOrder::TagElim) {
    const int xa = a.deg - a.e[0], xb = b.deg - b.e[0];
    if (xa != xb) return xa - xb;
    if (a.e[0] != b.e[0]) return a.e[0] - b.e[0];
  } else if (a.deg != b.deg) {
    return a.deg - b.deg;
  }
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return b.e[i] - a.e[i];
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t lo = 0, hi = 0;
    static_assert(sizeof(Monomial) == 16);
    __builtin_memcpy(&lo, m.e.data(), 8);
    __builtin_memcpy(&hi, m.e.data() + 8, 6);
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
  }
};

}  // namespace cremona
