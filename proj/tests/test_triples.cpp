#include <doctest.h>

#include <set>

#include "tmc/genus.hpp"
#include "tmc/triples.hpp"

using namespace tmc;

TEST_CASE("chi") {
  CHECK(chi(Triple(2, 3, 7)) == Rational(-1, 42));
  CHECK(chi(Triple(2, 3, 6)) == Rational(0));
  CHECK(chi(Triple(2, 2, 2)) == Rational(1, 2));
  CHECK(chi(Triple(7, 3, 2)) == Rational(-1, 42));  // normalization
  CHECK(is_hyperbolic(Triple(2, 3, 7)));
  CHECK_FALSE(is_hyperbolic(Triple(2, 3, 6)));
}

TEST_CASE("q_admissible") {
  CHECK(q_admissible(Triple(2, 3, 7), 13, 13));
  CHECK_FALSE(q_admissible(Triple(2, 3, 7), 11, 11));
  CHECK(q_admissible(Triple(2, 3, 7), 8, 2));
}

TEST_CASE("generate_candidates") {
  auto c7 = generate_candidates(7, 7, 0);
  std::set<Triple> s7(c7.begin(), c7.end());
  CHECK(s7.count(Triple(2, 3, 7)));
  CHECK(s7.count(Triple(2, 6, 7)));
  CHECK_FALSE(s7.count(Triple(2, 3, 5)));

  auto c4 = generate_candidates(4, 2, 0);
  std::set<Triple> s4(c4.begin(), c4.end());
  CHECK(s4.count(Triple(3, 3, 5)));

  CHECK(generate_candidates(89, 89, 0).empty());  // 2/(q-1) < 1/42
}

TEST_CASE("generate_candidates equals brute force for small q") {
  for (u64 q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29}) {
    u64 p = 2;
    while (q % p != 0) ++p;
    for (int g0 : {0, 1}) {
      std::set<Triple> brute;
      for (int a = 2; a <= (int)q + 1; ++a)
        for (int b = a; b <= (int)q + 1; ++b)
          for (int c = b; c <= (int)q + 1; ++c) {
            Triple t(a, b, c);
            if (!is_hyperbolic(t)) continue;
            if (!q_admissible(t, q, p)) continue;
            if (chi(t).abs() > chi_bound(q, g0)) continue;
            brute.insert(t);
          }
      auto got = generate_candidates(q, p, g0);
      CHECK(std::set<Triple>(got.begin(), got.end()) == brute);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("delta_mod_delta2") {
  CHECK(delta_mod_delta2(Triple(2, 3, 7)) == 0);
  CHECK(delta_mod_delta2(Triple(2, 3, 8)) == 1);
  CHECK(delta_mod_delta2(Triple(2, 4, 6)) == 2);
}

TEST_CASE("nonhyperbolic reduction catalog") {
  auto m1 = nonhyperbolic_reduction(CatalogTriple{2, 4, 6}, 2, 2);
  REQUIRE(m1.has_value());
  CHECK(m1->family == 1);
  CHECK(m1->genus == 0);

  auto m2 = nonhyperbolic_reduction(CatalogTriple{3, 9, 27}, 3, 3);
  REQUIRE(m2.has_value());
  CHECK(m2->family == 2);

  CHECK_FALSE(nonhyperbolic_reduction(CatalogTriple{2, 3, 7}, 13, 13).has_value());

  // infinity-marked patterns
  auto m3 = nonhyperbolic_reduction(CatalogTriple{6, kInfinity, kInfinity}, 2, 2);
  REQUIRE(m3.has_value());
  CHECK(m3->family == 1);

  auto m4 = nonhyperbolic_reduction(CatalogTriple{kInfinity, kInfinity, kInfinity}, 3, 3);
  REQUIRE(m4.has_value());
  CHECK(m4->family == 2);

  // family 4 is the PGL row
  auto m5 = nonhyperbolic_reduction(CatalogTriple{6, 9, 4}, 3, 3);
  REQUIRE(m5.has_value());
  CHECK(m5->family == 4);
  CHECK(m5->pxl == -1);

  // (6,3,3): all exponents one is excluded in family 3
  CHECK_FALSE(nonhyperbolic_reduction(CatalogTriple{6, 3, 3}, 3, 3).has_value());

  CHECK(reduction_catalog().size() == 16);
}
