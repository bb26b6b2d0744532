#include <doctest.h>

#include "cremona/invariants.hpp"

using namespace cremona;

namespace {

// Rows: H2, E2 in the basis H1, E1.
using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 as_matrix(const ClassFlip& c) { return {{{c.h2.a, c.h2.b}, {c.e2.a, c.e2.b}}}; }

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("class flip is an involution") {
    const Mat2 id{{{1, 0}, {0, 1}}};
    for (int d1 = 1; d1 <= 20; ++d1)
      for (int d2 = 1; d2 <= 20; ++d2) {
        const auto there = class_flip(d1, d2), back = class_flip(d2, d1);
        CHECK(mul(as_matrix(back), as_matrix(there)) == id);
        CHECK(there.h2 == DivisorClass{d1, -1});
        CHECK(secant_hypersurface_degree(d1, d2) == there.e2.a);
      }
    CHECK(class_flip(4, 4).e2 == DivisorClass{15, -4});
    CHECK(class_flip(2, 4).e2 == DivisorClass{7, -4});
    CHECK_THROWS_AS(class_flip(0, 3), Error);
  }

  TEST_CASE("ESB relations") {
    CHECK(esb_cremona_d2(4, 4, 2) == 4);
    CHECK(esb_cremona_r2(4, 4, 4) == 2);
    CHECK(esb_cremona_d2(5, 5, 3) == 5);
    CHECK(esb_cremona_d2(6, 2, 2) == 4);
    CHECK(esb_hypersurface_d2(2, 2, 2) == 4);
    CHECK_FALSE(esb_cremona_d2(4, 5, 0).has_value());
    CHECK((ContractionProfile{4, 4, 4, 4, 2, 2, true}.relations_hold()));
    CHECK_FALSE((ContractionProfile{4, 4, 4, 3, 2, 2, true}.relations_hold()));
  }

  TEST_CASE("ESB solutions satisfy both relations") {
    int solved = 0;
    for (int n = 2; n <= 9; ++n)
      for (int d1 = 1; d1 <= 8; ++d1)
        for (int r1 = 0; r1 < n; ++r1) {
          const auto d2 = esb_cremona_d2(n, d1, r1);
          if (!d2) continue;
          CHECK(2 + r1 == *d2 * ((n + 1) - d1 * (n - r1 - 1)));
          const auto r2 = esb_cremona_r2(n, d1, *d2);
          if (!r2) continue;
          CHECK(2 + *r2 == d1 * ((n + 1) - *d2 * (n - *r2 - 1)));
          CHECK(esb_cremona_d2(n, *d2, *r2) == d1);
          ++solved;
        }
    CHECK(solved > 5);
  }

  TEST_CASE("liaison and degree bookkeeping") {
    CHECK(liaison_degree(4, 4, 7) == 9);
    CHECK(liaison_degree(5, 5, 12) == 13);
    CHECK_THROWS_AS(liaison_degree(4, 4, 16), Error);
    CHECK_THROWS_AS(liaison_degree(4, 4, -1), Error);
    CHECK(blowup_quartic_selfint(3, 8, 3) == 12);
    CHECK(square_plus_t(11) == std::vector<std::pair<int, int>>{{2, 7}, {3, 2}});
    CHECK(square_plus_t(10) == std::vector<std::pair<int, int>>{{2, 6}, {3, 1}});
    CHECK_THROWS_AS(square_plus_t(3), Error);
  }
}
