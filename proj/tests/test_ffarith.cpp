#include <doctest.h>

#include <numeric>

#include "tmc/ffarith.hpp"
#include "tmc/matrep.hpp"

using namespace tmc;

TEST_CASE("deterministic modulus selection") {
  Fq f7(7, 1);
  CHECK(f7.modulus() == std::vector<std::uint32_t>{0, 1});  // x
  Fq f8(2, 3);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
  Fq f9(3, 2);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
  CHECK_THROWS_AS(Fq(6, 2), field_error);
  CHECK_THROWS_AS(Fq(5, 0), field_error);
}

TEST_CASE("field axioms and inverse law") {
  Fq F(7, 2);
  for (u64 i = 0; i < F.card(); ++i) {
    FqElem x = F.from_code(i);
    CHECK(F.add(x, F.zero()) == x);
    if (!x.is_zero()) CHECK(F.mul(x, F.inv(x)) == F.one());
  }
  // associativity / distributivity spot checks across all of F_25
  Fq G(5, 2);
  for (u64 i = 0; i < 25; ++i)
    for (u64 j = 0; j < 25; ++j) {
      FqElem x = G.from_code(i), y = G.from_code(j);
      CHECK(G.mul(x, y) == G.mul(y, x));
      FqElem z = G.from_code((i * 7 + j * 3 + 1) % 25);
      CHECK(G.mul(x, G.add(y, z)) == G.add(G.mul(x, y), G.mul(x, z)));
    }
}

TEST_CASE("powers") {
  Fq F(7, 1);
  CHECK(F.pow(F.from_int(3), 5) == F.from_int(5));  // 3^5 = 243 = 5 mod 7
}

TEST_CASE("mixing fields throws") {
  Fq F(7, 1), G(5, 1);
  CHECK_THROWS_AS(F.from_int(3) + G.from_int(2), field_error);
}

TEST_CASE("element_order") {
  Fq F(7, 1);
  CHECK(F.element_order(F.one()) == 1);
  CHECK(F.element_order(F.from_int(3)) == 6);
  CHECK(F.element_order(F.from_int(2)) == 3);
  CHECK_THROWS_AS(F.element_order(F.zero()), field_error);
}

TEST_CASE("root_of_unity") {
  Fq F(7, 1);
  CHECK(F.root_of_unity(2) == F.from_int(6));
  FqElem z3 = F.root_of_unity(3);
  CHECK((z3 == F.from_int(2) || z3 == F.from_int(4)));
  Fq F8(2, 3);
  CHECK(F8.element_order(F8.root_of_unity(7)) == 7);
  CHECK_THROWS_AS(F.root_of_unity(5), field_error);

  // exact order for every divisor of q - 1
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 3}, {2, 4}, {7, 2}}) {
    Fq K(p, r);
    u128 q1 = K.card() - 1;
    for (u128 n = 1; n <= q1; ++n)
      if (q1 % n == 0) CHECK(K.element_order(K.root_of_unity(n)) == n);
  }
}

TEST_CASE("is_square") {
  Fq F13(13, 1);
  CHECK(F13.is_square(F13.from_int(12)));  // -1 = 5^2 mod 13
  Fq F7(7, 1);
  CHECK_FALSE(F7.is_square(F7.from_int(6)));  // squares mod 7 are 1,2,4
  CHECK(F7.is_square(F7.zero()));
  Fq F16(2, 4);
  for (u64 i = 0; i < 16; ++i) CHECK(F16.is_square(F16.from_code(i)));

  // multiplicativity: is_square(xy) = is_square(x) XNOR is_square(y)
  Fq F9(3, 2);
  for (u64 i = 1; i < 9; ++i)
    for (u64 j = 1; j < 9; ++j) {
      FqElem x = F9.from_code(i), y = F9.from_code(j);
      CHECK(F9.is_square(F9.mul(x, y)) == (F9.is_square(x) == F9.is_square(y)));
    }

  // brute-force table cross-check for a couple of fields
  for (auto [p, r] : {std::pair<u64, unsigned>{5, 2}, {7, 2}, {3, 3}}) {
    Fq K(p, r);
    std::vector<char> tbl(K.card() ? (size_t)K.card() : 0, 0);
    for (u64 i = 0; i < K.card(); ++i) tbl[K.mul(K.from_code(i), K.from_code(i)).code()] = 1;
    for (u64 i = 0; i < K.card(); ++i)
      CHECK(K.is_square(K.from_code(i)) == (bool)tbl[i]);
  }
}

TEST_CASE("frobenius_degree") {
  Fq F8(2, 3);
  CHECK(F8.frobenius_degree(F8.from_int(1)) == 1);
  CHECK(F8.frobenius_degree(F8.root_of_unity(7)) == 3);  // ord_7(2) = 3
  Fq F81(3, 4);
  FqElem z5 = F81.root_of_unity(5);
  CHECK(F81.frobenius_degree(F81.add(z5, F81.inv(z5))) == 2);  // ord of 3 in (Z/5)*/± is 2
  for (u64 i = 0; i < 81; ++i) CHECK(4 % F81.frobenius_degree(F81.from_code(i)) == 0);
  // deg(xy) divides lcm(deg x, deg y)
  Fq F64(2, 6);
  for (u64 i = 1; i < 64; i += 7)
    for (u64 j = 1; j < 64; j += 5) {
      unsigned dx = F64.frobenius_degree(F64.from_code(i));
      unsigned dy = F64.frobenius_degree(F64.from_code(j));
      unsigned dxy = F64.frobenius_degree(F64.mul(F64.from_code(i), F64.from_code(j)));
      CHECK(std::lcm(dx, dy) % dxy == 0);
    }
}

TEST_CASE("lambda_reduced") {
  Fq F7(7, 1);
  CHECK(F7.lambda_reduced(2) == F7.from_int(5));   // -2
  CHECK(F7.lambda_reduced(14) == F7.from_int(5));  // zeta_7 reduces to 1 above 7
  // lambda_7 above 13 lands in the prime field and satisfies the reduced
  // minimal cubic x^3 + x^2 - 2x - 1
  Fq F169(13, 2);
  FqElem l7 = F169.lambda_reduced(7);
  CHECK(F169.frobenius_degree(l7) == 1);
  FqElem v = F169.add(F169.mul(F169.mul(l7, l7), l7),
                      F169.sub(F169.mul(l7, l7),
                               F169.add(F169.add(l7, l7), F169.one())));
  CHECK(v.is_zero());
}

TEST_CASE("factor helpers") {
  auto f = factor_u128((u128)268435455);  // 2^28 - 1 = 3*5*29*43*113*127
  u128 prod = 1;
  for (auto [p, e] : f)
    for (int i = 0; i < e; ++i) prod *= p;
  CHECK(prod == 268435455);
  CHECK(is_prime_u64(251));
  CHECK_FALSE(is_prime_u64(253));  // 11 * 23
}

TEST_CASE("field cache returns shared instances") {
  auto a = get_field(13, 2);
  auto b = get_field(13, 2);
  CHECK(a.get() == b.get());
}
