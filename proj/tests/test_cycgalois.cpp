#include <doctest.h>

#include <numeric>

#include "tmc/cycgalois.hpp"
#include "tmc/ffarith.hpp"

using namespace tmc;

TEST_CASE("field tower degrees") {
  auto t1 = field_tower(Triple(2, 3, 7));
  CHECK(t1.degE == 3);
  CHECK(t1.degF == 3);
  auto t2 = field_tower(Triple(2, 4, 6));
  CHECK(t2.degE == 1);
  CHECK(t2.degF == 4);
  auto t3 = field_tower(Triple(2, 3, 8));
  CHECK(t3.degE == 2);
  CHECK(t3.degF == 4);
  auto t4 = field_tower(Triple(2, 5, 11));
  CHECK(t4.degE == 10);
  auto t5 = field_tower(Triple(2, 3, 13));
  CHECK(t5.degE == 6);
  auto t6 = field_tower(Triple(3, 4, 4));
  CHECK(t6.degE == 1);
  CHECK(t6.degF == 2);
  // higher-degree towers
  CHECK(field_tower(Triple(2, 3, 11)).degE == 5);
  CHECK(field_tower(Triple(2, 3, 17)).degE == 8);
  CHECK(field_tower(Triple(2, 3, 19)).degE == 9);
  CHECK(field_tower(Triple(2, 7, 9)).degE == 9);
  CHECK(field_tower(Triple(2, 5, 12)).degE == 4);
  CHECK(field_tower(Triple(3, 6, 8)).degE == 4);
  CHECK(field_tower(Triple(2, 3, 24)).degE == 4);
}

TEST_CASE("prime splitting against table rows") {
  auto s = prime_splitting(Triple(2, 3, 7), 13);
  CHECK(s.eE == 1);
  CHECK(s.fE == 1);
  CHECK(s.gE == 3);
  CHECK((long long)s.qE == 13);
  CHECK(s.pxl == 1);

  s = prime_splitting(Triple(2, 3, 7), 2);
  CHECK(s.fE == 3);
  CHECK((long long)s.qE == 8);
  CHECK(s.gE == 1);

  s = prime_splitting(Triple(2, 3, 8), 7);
  CHECK((long long)s.qE == 7);
  CHECK(s.pxl == -1);
  CHECK(s.gE == 2);

  s = prime_splitting(Triple(2, 3, 13), 13);  // totally ramified
  CHECK(s.eE == 6);
  CHECK(s.fE == 1);
  CHECK(s.gE == 1);

  s = prime_splitting(Triple(2, 6, 7), 7);
  CHECK((long long)s.qE == 7);
  CHECK(s.pxl == -1);
  CHECK(s.gE == 1);
}

TEST_CASE("e*f*g = degE") {
  for (auto t : {Triple(2, 3, 7), Triple(2, 3, 8), Triple(2, 5, 11), Triple(3, 4, 12),
                 Triple(2, 3, 30), Triple(4, 6, 8)}) {
    for (long long p : {2, 3, 5, 7, 11, 13, 17}) {
      auto s = prime_splitting(t, p);
      CHECK(s.eE * s.fE * s.gE == s.degE);
      CHECK(s.fF % s.fE == 0);
      CHECK(s.fF / s.fE <= 2);
    }
  }
}

TEST_CASE("kronecker split test") {
  CHECK(kronecker_split_test(Triple(2, 3, 7), 13) == 1);
  CHECK(kronecker_split_test(Triple(2, 3, 8), 7) == -1);
  CHECK(kronecker_split_test(Triple(2, 3, 8), 17) == 1);
  CHECK(kronecker_split_test(Triple(2, 3, 10), 11) == -1);
  CHECK_THROWS(kronecker_split_test(Triple(2, 3, 8), 3));  // 3 | 2abc
}

TEST_CASE("kronecker agrees with the subgroup model") {
  for (auto t : {Triple(2, 3, 7), Triple(2, 3, 8), Triple(2, 4, 5), Triple(3, 3, 4),
                 Triple(2, 5, 5), Triple(3, 6, 6), Triple(2, 3, 12)}) {
    for (long long p = 2; p <= 60; ++p) {
      if (!is_prime_u64((u64)p) || t.product2() % p == 0) continue;
      CHECK(kronecker_split_test(t, p) == prime_splitting(t, p).pxl);
    }
  }
}

TEST_CASE("beta admissibility") {
  CHECK(beta_admissible(Triple(2, 3, 7), 13));  // coprime fast path
  CHECK(beta_admissible(Triple(2, 3, 7), 7));   // beta is a unit here
  CHECK(beta_admissible(Triple(2, 3, 12), 5));
  CHECK_FALSE(beta_admissible(Triple(3, 4, 4), 3));   // beta = 3
  CHECK_FALSE(beta_admissible(Triple(2, 3, 49), 7));  // 49 is a proper multiple of 7
}

TEST_CASE("relative ramification test") {
  CHECK(dfe_coprime(Triple(2, 3, 7), 29));
  CHECK(dfe_coprime(Triple(2, 3, 8), 3));
  CHECK(dfe_coprime(Triple(3, 3, 4), 3));
}

TEST_CASE("frobenius oracle agreement on a fast grid") {
  for (int a = 2; a <= 20; ++a)
    for (int b = a; b <= 20; ++b)
      for (int c = b; c <= 20; ++c) {
        Triple t(a, b, c);
        if (t.lcm() > 20) continue;
        // reduction-degree oracle, on its sound domain (p coprime to 2abc)
        for (long long p : {2, 3, 5, 7, 11, 13, 19, 29}) {
          if (t.product2() % p == 0) continue;
          auto s = prime_splitting(t, p);
          CHECK(frobenius_oracle_fE(t, p) == s.fE);
          CHECK(frobenius_oracle_fF(t, p) == s.fF);
        }
        // symbolic subgroup oracle, all primes at once
        auto tow = field_tower(t);
        auto sym = field_tower_symbolic(t);
        CHECK(tow.HE == sym.HE);
        CHECK(tow.HF == sym.HF);
      }
}

TEST_CASE("symbolic oracle on the tower where generator reduction degenerates") {
  // at p = 3 the product generator of E(4,6,6) = Q(sqrt 2) reduces to zero,
  // so only the subgroup data can see the inert quadratic residue field
  auto tow = field_tower(Triple(4, 6, 6));
  auto sym = field_tower_symbolic(Triple(4, 6, 6));
  CHECK(tow.HE == sym.HE);
  CHECK(tow.degE == 2);
  auto s = prime_splitting(Triple(4, 6, 6), 3);
  CHECK(s.fE == 2);
  CHECK(frobenius_oracle_fE(Triple(4, 6, 6), 3) == 1);  // the documented degeneracy
}
