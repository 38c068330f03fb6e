#ifndef TMC_FFARITH_HPP
#define TMC_FFARITH_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "tmc/ints.hpp"

namespace tmc {

// Thrown when an operation mixes elements of different fields, inverts zero,
// or asks for a root of unity whose order does not divide q - 1.
struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Fq;

// An element of F_{p^r}: a residue polynomial of degree < r with coefficients
// in [0, p).  Elements remember their field; mixing fields throws.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const Fq* field, std::vector<std::uint32_t> coeffs)
      : field_(field), c_(std::move(coeffs)) {}

  const Fq& field() const;
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator-() const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  FqElem inv() const;
  FqElem pow(u128 e) const;

  // Encodes the coefficient vector as an integer in [0, q) (base-p digits,
  // constant term least significant).  Stable element id for tables/sorting.
  u64 code() const;

 private:
  friend class Fq;
  const Fq* field_ = nullptr;
  std::vector<std::uint32_t> c_;
};

// F_{p^r} = F_p[x]/(modulus).  The modulus is the lexicographically smallest
// monic irreducible polynomial of degree r, found by deterministic search, so
// field construction is reproducible across platforms and runs.
class Fq {
 public:
  Fq(u64 p, unsigned r);

  u64 p() const { return p_; }
  unsigned r() const { return r_; }
  // Monic modulus, coefficients c[0] + c[1] x + ... + c[r] x^r with c[r] = 1.
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  u128 card() const { return q_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(u64 v) const;      // canonical image of an integer
  FqElem from_code(u64 code) const;  // inverse of FqElem::code()
  FqElem gen_x() const;              // class of x

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem inv(const FqElem& a) const;
  FqElem pow(const FqElem& a, u128 e) const;
  FqElem frobenius(const FqElem& a) const;  // a^p

  bool same_field(const Fq& o) const;

  // Multiplicative order of a nonzero element; divides q - 1.  Computed by
  // stripping prime factors of q - 1 (trial-division factorization, cached).
  u128 element_order(const FqElem& a) const;

  // Element of exact multiplicative order n, derived as g^((q-1)/n) from the
  // cached smallest generator g of the unit group.  Requires n | q - 1.
  FqElem root_of_unity(u128 n) const;

  // Euler criterion; in even characteristic everything is a square, and
  // is_square(0) == true by convention.
  bool is_square(const FqElem& a) const;

  // Least d >= 1 with a^(p^d) == a; the degree over F_p of the subfield
  // generated by a.  Divides r.
  unsigned frobenius_degree(const FqElem& a) const;

  // Reduction of lambda_n = zeta_n + 1/zeta_n at a prime above p: the p-power
  // part of n is stripped (those roots of unity reduce to 1) and the result
  // is w + 1/w for w = root_of_unity(n').  Requires n' | q - 1.
  FqElem lambda_reduced(u128 n) const;

  const FqElem& generator() const;  // smallest generator of the unit group

  const std::vector<std::pair<u64, int>>& factor_unit_order() const;

 private:
  void check(const FqElem& a) const;
  std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const;

  u64 p_;
  unsigned r_;
  u128 q_;
  std::vector<std::uint32_t> mod_;
  mutable std::vector<std::pair<u64, int>> unit_factors_;  // of q - 1
  mutable std::unique_ptr<FqElem> gen_;
};

// Deterministic factorization by trial division; works up to ~2^64 inputs
// with small factors, which covers every unit-group order we construct.
std::vector<std::pair<u64, int>> factor_u128(u128 n);

bool is_prime_u64(u64 n);

u128 pow_u128(u64 base, unsigned e);  // checked: throws on 128-bit overflow

}  // namespace tmc

#endif
