#ifndef TMC_GENUS_HPP
#define TMC_GENUS_HPP

#include <optional>

#include "tmc/ints.hpp"
#include "tmc/rational.hpp"
#include "tmc/triples.hpp"

namespace tmc {

// Genus of the Galois cover with group order #G over the triple:
// g = 1 - (#G / 2) * chi(a,b,c), exact; throws if the result is not a
// nonnegative integer.
long long genus_galois(const Triple& t, u128 group_order);

// Ramification orbit counts on P^1(F_q) for an element of order s:
//   k_s = (q-1)/s  if s | q-1,   q/s  if s = p,   (q+1)/s  if s | q+1.
// For s = 2 with q odd the class is ambiguous (2 divides both q-1 and q+1);
// genus_x0 resolves it by integrality of the genus.
struct X0Genus {
  long long genus;
  long long k2;        // the resolved k_2 (equals the unambiguous value otherwise)
  bool eps_half;       // true iff the correction term is 1/2 (k_2 = (q+1)/2)
};

// Genus of the degree-(q+1) Borel quotient via Riemann-Hurwitz.
// `split2`, when supplied for a = 2 and q odd, asserts consistency with the
// integrality determination (split <=> k_2 = (q-1)/2).
X0Genus genus_x0(const Triple& t, u64 q, u64 p, int pxl,
                 std::optional<bool> split2 = std::nullopt);

// Genus of the unipotent-level quotient of index q^2-1 (halved for PSL with
// q odd); even q always uses the PGL shape since PSL = PGL there.
long long genus_x1(const Triple& t, u64 q, u64 p, int pxl);

// Level-norm bound q <= 84(g0+1)+1.
u64 q_bound(int genus_max);

// |chi| bound 2(g0+1)/(q-1) for candidates at residue cardinality q.
Rational chi_bound(u64 q, int genus_max);

// Display-form rounding: round to nearest with halves rounded down.
// Test mirror of the closed-form k_s branches.
long long round_half_down(u64 num, u64 den);

// Orders of PSL_2(F_q) / PGL_2(F_q) as subgroups of the projective line's
// symmetry group; pxl = +1 gives PSL, -1 gives PGL.
u128 pxl_group_order(u64 q, int pxl);

}  // namespace tmc

#endif
