#include <doctest.h>

#include <tuple>
#include <vector>

#include "tmc/genus.hpp"

using namespace tmc;

TEST_CASE("galois cover genus") {
  CHECK(genus_galois(Triple(2, 3, 7), 168) == 3);
  CHECK(genus_galois(Triple(2, 3, 7), 504) == 7);  // 84(g-1) = #G
  CHECK(genus_galois(Triple(2, 3, 6), 12) == 1);   // chi = 0
  CHECK_THROWS(genus_galois(Triple(2, 3, 7), 100));  // non-integral
}

TEST_CASE("borel quotient genus") {
  auto g = genus_x0(Triple(2, 3, 7), 7, 7, +1);
  CHECK(g.genus == 0);
  CHECK(g.k2 == 4);
  CHECK(g.eps_half);

  CHECK(genus_x0(Triple(2, 3, 7), 27, 3, +1).genus == 1);
  CHECK(genus_x0(Triple(2, 4, 6), 13, 13, -1).genus == 0);
  CHECK(genus_x0(Triple(2, 3, 7), 13, 13, +1).genus == 0);
  CHECK_FALSE(genus_x0(Triple(2, 3, 7), 13, 13, +1).eps_half);  // 13 = 1 mod 4, PSL

  CHECK_THROWS(genus_x0(Triple(2, 3, 7), 11, 11, +1));  // not q-admissible
}

TEST_CASE("split flag consistency") {
  // (2,3,8) over F_7: order-2 image is split, eps = 0
  CHECK_NOTHROW(genus_x0(Triple(2, 3, 8), 7, 7, -1, true));
  CHECK_THROWS(genus_x0(Triple(2, 3, 8), 7, 7, -1, false));
  // (2,6,6) over F_7: non-split, eps = 1/2
  CHECK_NOTHROW(genus_x0(Triple(2, 6, 6), 7, 7, -1, false));
  CHECK_THROWS(genus_x0(Triple(2, 6, 6), 7, 7, -1, true));
}

TEST_CASE("unipotent level genus") {
  CHECK(genus_x1(Triple(2, 3, 7), 7, 7, +1) == 0);
  CHECK(genus_x1(Triple(2, 3, 7), 8, 2, +1) == 0);
  CHECK(genus_x1(Triple(2, 3, 8), 7, 7, -1) == 2);
  CHECK(genus_x1(Triple(3, 3, 4), 9, 3, +1) == 0);
  // the unipotent level always dominates the Borel level
  std::vector<std::tuple<Triple, u64, u64, int>> rows = {
      {Triple(2, 3, 7), 13, 13, 1},  {Triple(2, 3, 8), 17, 17, 1},
      {Triple(2, 4, 5), 5, 5, -1},   {Triple(2, 3, 10), 11, 11, -1},
      {Triple(3, 3, 5), 4, 2, 1}};
  for (auto [t, q, p, pxl] : rows) {
    CHECK(genus_x1(t, q, p, pxl) >= genus_x0(t, q, p, pxl).genus);
  }
}

TEST_CASE("bounds") {
  CHECK(q_bound(0) == 85);
  CHECK(q_bound(2) == 253);
  CHECK(chi_bound(43, 0) == Rational(1, 21));
  CHECK(chi_bound(85, 0) == Rational(1, 42));
  CHECK(chi_bound(3, 2) == Rational(3));
  CHECK(chi(Triple(2, 3, 7)).abs() <= chi_bound(43, 0));
}

TEST_CASE("display rounding mirrors the orbit-count branches") {
  CHECK(round_half_down(3, 2) == 1);
  CHECK(round_half_down(7, 8) == 1);  // rounds up: 7/8 is nearer to 1
  for (u64 q = 3; q <= 260; ++q) {
    for (u64 s = 3; s <= q + 1; ++s) {
      if ((q - 1) % s == 0) CHECK(round_half_down(q, s) == (long long)((q - 1) / s));
      if ((q + 1) % s == 0) CHECK(round_half_down(q, s) == (long long)((q + 1) / s));
      if (q % s == 0) CHECK(round_half_down(q, s) == (long long)(q / s));
    }
    if (q % 2 == 1) CHECK(round_half_down(q, 2) == (long long)((q - 1) / 2));
  }
}

TEST_CASE("group orders") {
  CHECK((long long)pxl_group_order(7, +1) == 168);
  CHECK((long long)pxl_group_order(7, -1) == 336);
  CHECK((long long)pxl_group_order(4, +1) == 60);  // PSL = PGL in even characteristic
}
