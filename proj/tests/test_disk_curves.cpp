#include "doctest.h"

#include <set>

#include "agol/disk_curves.hpp"

using namespace agol;

namespace {

// Interval by direct enumeration: k in [(i-(j-1))/2, (i+(j-1))/2], reduced mod n.
std::vector<int> brute_interval(int i, int j, int n) {
  std::vector<int> out;
  for (int twice_k = i - (j - 1); twice_k <= i + (j - 1); twice_k += 2) {
    out.push_back(((twice_k / 2) % n + n) % n);
  }
  return out;
}

Errc code_of(int i, int j, int n) {
  try {
    (void)beta_curve(i, j, n);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::schema;
}

}  // namespace

TEST_CASE("beta intervals") {
  CHECK(beta_curve(2, 3, 6).encircled() == std::vector<int>{0, 1, 2});
  CHECK(beta_curve(1, 2, 6).encircled() == std::vector<int>{0, 1});
  CHECK(beta_curve(11, 4, 6).encircled() == std::vector<int>{4, 5, 0, 1});
  CHECK(beta_curve(7, 2, 4).encircled() == std::vector<int>{3, 0});
  CHECK(encircled_punctures(beta_curve(2, 3, 6)) ==
        encircled_punctures(beta_curve(2 + 12, 3, 6)));
  CHECK(beta_curve(2, 3, 6).same_class(beta_curve(14, 3, 6)));
  CHECK_FALSE(beta_curve(2, 3, 6).same_class(beta_curve(8, 3, 6)));
}

TEST_CASE("intervals agree with enumeration") {
  for (int n = 4; n <= 11; ++n) {
    for (int i = 1; i <= 4 * n; ++i) {
      for (int j = 2; j <= n - 1; ++j) {
        if ((i + j) % 2 == 0) continue;
        const Curve c = beta_curve(i, j, n);
        const auto want = brute_interval(i, j, n);
        REQUIRE(c.encircled() == want);
        for (int k = 0; k < n; ++k) {
          CHECK(c.encircles(k) == (std::find(want.begin(), want.end(), k) != want.end()));
        }
      }
    }
  }
}

TEST_CASE("constructor errors") {
  CHECK(code_of(2, 2, 6) == Errc::parity_violation);
  CHECK(code_of(1, 1, 6) == Errc::width_out_of_range);
  CHECK(code_of(2, 7, 6) == Errc::width_out_of_range);
  CHECK(code_of(1, 6, 6) == Errc::width_out_of_range);
  CHECK(code_of(0, 3, 6) == Errc::index_out_of_range);
  CHECK(code_of(1, 2, 3) == Errc::puncture_count);
  CHECK_THROWS_AS(PuncturedDisk(3), Error);
  CHECK(PuncturedDisk(6).euler_characteristic() == -5);
}

TEST_CASE("intersection rule") {
  auto on6 = [](int i, int j) { return beta_curve(i, j, 6); };
  CHECK(geometric_intersection(on6(1, 2), on6(7, 2)) == 0);   // {0,1} vs {3,4}
  CHECK(geometric_intersection(on6(2, 3), on6(4, 3)) == 2);   // {0,1,2} vs {1,2,3}
  CHECK(geometric_intersection(on6(1, 2), on6(11, 4)) == 0);  // nested in {4,5,0,1}
  CHECK(geometric_intersection(on6(2, 3), on6(14, 3)) == 0);
  CHECK_THROWS_AS(geometric_intersection(on6(1, 2), beta_curve(1, 2, 8)), Error);

  // Symmetry, and the brute-force set rule: overlap that is neither nesting
  // nor identity gives 2.
  for (int n = 4; n <= 9; ++n) {
    std::vector<Curve> all;
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 2; j < n; ++j)
        if ((i + j) % 2 == 1) all.push_back(beta_curve(i, j, n));
    for (const auto& a : all) {
      const auto ea = a.encircled();
      const std::set<int> sa(ea.begin(), ea.end());
      for (const auto& b : all) {
        const auto eb = b.encircled();
        const std::set<int> sb(eb.begin(), eb.end());
        int shared = 0;
        for (int k : sb) shared += static_cast<int>(sa.count(k));
        const bool nested = shared == static_cast<int>(sa.size()) ||
                            shared == static_cast<int>(sb.size());
        const int want = (shared == 0 || nested) ? 0 : 2;
        REQUIRE(geometric_intersection(a, b) == want);
        REQUIRE(geometric_intersection(a, b) == geometric_intersection(b, a));
      }
    }
  }
}

TEST_CASE("tokens") {
  const Curve c = beta_curve(11, 4, 6);
  CHECK(c.token() == "b11_4");
  CHECK(parse_curve_token("b11_4", 6) == c);
  CHECK_THROWS_AS(parse_curve_token("b11-4", 6), Error);
  CHECK_THROWS_AS(parse_curve_token("b2_2", 6), Error);
}
