#include "cremona/points.hpp"

namespace cremona {

std::uint64_t projective_point_count(int n, std::uint64_t q) {
  // 1 + q + ... + q^n, saturating
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i <= n; ++i) {
    if (total > UINT64_MAX - power) return UINT64_MAX;
    total += power;
    if (i < n && power > UINT64_MAX / q) return UINT64_MAX;
    power *= q;
  }
  return total;
}

}  // namespace cremona
