#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cremona/hilbert.hpp"

namespace cremona {

/// Numerical data (n, m, d1, d2, r1, r2) of a contraction or Cremona map.
struct ContractionProfile {
  int n = 0, m = 0;
  int d1 = 0, d2 = 0;
  int r1 = 0, r2 = 0;
  bool cremona = false;

  /// Both dimension relations hold (only meaningful for m = n).
  bool relations_hold() const;
};

/// a H1 + b E1.
struct DivisorClass {
  long long a = 0, b = 0;
  DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
  DivisorClass operator-(const DivisorClass& o) const { return {a - o.a, b - o.b}; }
  DivisorClass operator*(long long k) const { return {a * k, b * k}; }
  bool operator==(const DivisorClass&) const = default;
};

/// d2 from 2 + r1 = d2 [(n+1) - d1 (n - r1 - 1)]; nullopt when no positive integer solves it.
std::optional<int> esb_cremona_d2(int n, int d1, int r1);
/// r2 from the companion relation with the roles of d1, d2 exchanged.
std::optional<int> esb_cremona_r2(int n, int d1, int d2);
/// d2 for a contraction of a hypersurface: 2 + r1 = d2 [2n - 1 + d1 (r1 + 1 - 2n)].
std::optional<int> esb_hypersurface_d2(int n, int d1, int r1);

struct ClassFlip {
  DivisorClass h2, e2;
};
ClassFlip class_flip(int d1, int d2);
long long secant_hypersurface_degree(int d1, int d2);

/// Free resolution: homological position -> list of (twist, rank); twists are
/// the degrees of the generators (O(-twist)).
struct ResolutionSpec {
  int ambient = 0;
  std::vector<std::vector<std::pair<int, int>>> modules;
};

/// HP of S/I from a resolution 0 <- S/I <- S <- F1 <- F2 ...
HilbertData resolution_hp(const ResolutionSpec& spec);
/// Resolution 0 -> O(-n-1)^n -> O(-n)^{n+1} -> I -> 0 on P^m.
ResolutionSpec hilbert_burch_spec(int m, int n);
HilbertData hilbert_burch_hp(int m, int n);

/// d e - k; RangeError unless 0 <= k < d e.
long long liaison_degree(long long d, long long e, long long known);
/// All (h, t) with b = h^2 + t, h >= 2, t >= 0.
std::vector<std::pair<int, int>> square_plus_t(int b);
/// (2H - E)^4 on the blow-up of a cubic along a curve: 16 degY - 8 degC + (3 degC + 2g - 2).
long long blowup_quartic_selfint(long long deg_y, long long deg_c, long long genus_c);

}  // namespace cremona
