#ifndef TMC_CYCLOTOMIC_HPP
#define TMC_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "tmc/ffarith.hpp"

namespace tmc {

// Cyclotomic polynomial Phi_n over the integers (coefficients are tiny for
// the n we meet; int64 is far more than enough).
std::vector<long long> cyclotomic_poly(u64 n);

// F_p[x]/(Phi_n(x)) for p coprime to n.  Since Phi_n mod p is squarefree,
// this is a product of copies of F_{p^d} with d = ord_p(n), one factor per
// prime of Q(zeta_n) above p.  Computing here evaluates "at all primes above
// p at once": an element is zero in the ring iff its reduction vanishes at
// every such prime.  This sidesteps both the choice of a prime and the
// construction of F_{p^d} when d is large.
class CycRing {
 public:
  CycRing(u64 p, u64 n);

  u64 p() const { return p_; }
  u64 n() const { return n_; }
  unsigned degree() const { return (unsigned)phi_.size() - 1; }

  using Elem = std::vector<std::uint32_t>;  // length = degree(), may be all 0

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const;
  Elem zeta_pow(long long k) const;  // x^(k mod n) reduced mod Phi_n

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, u128 e) const;
  // x -> x^p is F_p-linear; applied through a precomputed matrix
  Elem frobenius(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  // Image of lambda_s = zeta_s + 1/zeta_s under zeta_n -> x, for s | n.
  Elem lambda_image(u64 s) const;

  // Least d >= 1 with a^(p^d) == a.  All CRT components of a reduction of a
  // global cyclotomic integer are Galois-conjugate, so this is the common
  // residue degree of F_p(a-bar).
  unsigned frobenius_degree(const Elem& a) const;

 private:
  u64 p_, n_;
  std::vector<std::uint32_t> phi_;  // Phi_n mod p, monic
  std::vector<Elem> frob_;          // images of x^j under x -> x^p
};

// Process-wide cache of rings keyed by (p, n).
std::shared_ptr<const CycRing> get_cyc_ring(u64 p, u64 n);

}  // namespace tmc

#endif
