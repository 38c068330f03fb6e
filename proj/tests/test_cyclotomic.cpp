#include <doctest.h>

#include "tmc/cyclotomic.hpp"

using namespace tmc;

TEST_CASE("cyclotomic polynomials over Z") {
  CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
  // first index with a coefficient outside {-1,0,1}
  auto c105 = cyclotomic_poly(105);
  CHECK(c105[7] == -2);
  CHECK(c105.size() == 49);  // phi(105) = 48
}

TEST_CASE("ring arithmetic and roots of unity") {
  CycRing R(7, 12);
  CHECK(R.degree() == 4);
  // x has multiplicative order 12
  auto x = R.zeta_pow(1);
  auto acc = R.one();
  for (int i = 1; i <= 12; ++i) {
    acc = R.mul(acc, x);
    if (i < 12) CHECK_FALSE(R.eq(acc, R.one()));
  }
  CHECK(R.eq(acc, R.one()));
  // lambda_12 = 2cos(pi/6) squares to 3
  auto l12 = R.lambda_image(12);
  CHECK(R.eq(R.mul(l12, l12), R.from_int(3)));
  // lambda_4 = 0, lambda_6 = 1
  CHECK(R.is_zero(R.lambda_image(4)));
  CHECK(R.eq(R.lambda_image(6), R.one()));
}

TEST_CASE("frobenius degrees in the ring") {
  CycRing R(2, 7);
  CHECK(R.degree() == 6);
  CHECK(R.frobenius_degree(R.zeta_pow(1)) == 3);        // ord_7(2) = 3
  auto lam = R.add(R.zeta_pow(1), R.zeta_pow(6));
  CHECK(R.frobenius_degree(lam) == 3);                  // Q(lambda_7) has degree 3
  CHECK(R.frobenius_degree(R.one()) == 1);
}

TEST_CASE("degree-one rings") {
  CycRing R1(5, 1);
  CHECK(R1.eq(R1.zeta_pow(3), R1.one()));
  CycRing R2(5, 2);
  CHECK(R2.eq(R2.zeta_pow(1), R2.from_int(-1)));
}

TEST_CASE("ring cache") {
  auto a = get_cyc_ring(7, 24);
  auto b = get_cyc_ring(7, 24);
  CHECK(a.get() == b.get());
}
