#include "cremona/invariants.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::optional<int> positive_quotient(long long num, long long den) {
  if (den <= 0 || num <= 0 || num % den != 0) return std::nullopt;
  return static_cast<int>(num / den);
}

}  // namespace

std::optional<int> esb_cremona_d2(int n, int d1, int r1) {
  return positive_quotient(2 + r1, (n + 1) - static_cast<long long>(d1) * (n - r1 - 1));
}

std::optional<int> esb_cremona_r2(int n, int d1, int d2) {
  // 2 + r2 = d1 [(n+1) - d2 (n - r2 - 1)]  =>  r2 (1 - d1 d2) = d1 (n+1) - d1 d2 (n-1) - 2
  const long long num = static_cast<long long>(d1) * d2 * (n - 1) - static_cast<long long>(d1) * (n + 1) + 2;
  const long long den = static_cast<long long>(d1) * d2 - 1;
  if (den <= 0 || num < 0 || num % den != 0) return std::nullopt;
  return static_cast<int>(num / den);
}

std::optional<int> esb_hypersurface_d2(int n, int d1, int r1) {
  return positive_quotient(2 + r1, 2LL * n - 1 + static_cast<long long>(d1) * (r1 + 1 - 2 * n));
}

bool ContractionProfile::relations_hold() const {
  const auto d = esb_cremona_d2(n, d1, r1);
  const auto back = esb_cremona_d2(n, d2, r2);
  return d && *d == d2 && back && *back == d1;
}

ClassFlip class_flip(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw Error(ErrorKind::Range, "degrees must be positive");
  const DivisorClass h1{1, 0};
  const DivisorClass h2{d1, -1};
  return {h2, h2 * d2 - h1};
}

long long secant_hypersurface_degree(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw Error(ErrorKind::Range, "degrees must be positive");
  return static_cast<long long>(d1) * d2 - 1;
}

HilbertData resolution_hp(const ResolutionSpec& spec) {
  if (spec.ambient < 0) throw Error(ErrorKind::MalformedSpec, "negative ambient dimension");
  const int nvars = spec.ambient + 1;
  // numerator of the Hilbert series over (1-t)^nvars: 1 - F1 + F2 - ...
  std::vector<long long> num{1};
  for (std::size_t pos = 0; pos < spec.modules.size(); ++pos) {
    const long long sign = pos % 2 == 0 ? -1 : 1;
    for (const auto& [twist, rank] : spec.modules[pos]) {
      if (twist < 0 || rank < 0) throw Error(ErrorKind::MalformedSpec, "negative twist or rank");
      if (num.size() <= static_cast<std::size_t>(twist)) num.resize(twist + 1, 0);
      num[twist] += sign * rank;
    }
  }
  return hilbert_from_numerator(num, nvars);
}

ResolutionSpec hilbert_burch_spec(int m, int n) {
  return ResolutionSpec{m, {{{n, n + 1}}, {{n + 1, n}}}};
}

HilbertData hilbert_burch_hp(int m, int n) {
  if (m < n || n < 2) throw Error(ErrorKind::Range, "need m >= n >= 2");
  return resolution_hp(hilbert_burch_spec(m, n));
}

long long liaison_degree(long long d, long long e, long long known) {
  if (d < 1 || e < 1 || known < 0 || known >= d * e)
    throw Error(ErrorKind::Range, "known degree must lie in [0, d e)");
  return d * e - known;
}

std::vector<std::pair<int, int>> square_plus_t(int b) {
  if (b < 4) throw Error(ErrorKind::Range, "need b >= 4");
  std::vector<std::pair<int, int>> out;
  for (int h = 2; h * h <= b; ++h) out.emplace_back(h, b - h * h);
  return out;
}

long long blowup_quartic_selfint(long long deg_y, long long deg_c, long long genus_c) {
  if (deg_y < 0 || deg_c < 0 || genus_c < 0) throw Error(ErrorKind::Range, "negative input");
  if (deg_c == 0) return 16 * deg_y;
  return 16 * deg_y - 8 * deg_c + (3 * deg_c + 2 * genus_c - 2);
}

}  // namespace cremona
