#ifndef TMC_CYCGALOIS_HPP
#define TMC_CYCGALOIS_HPP

#include <vector>

#include "tmc/ints.hpp"
#include "tmc/triples.hpp"

namespace tmc {

// Pure-integer model of Gal(Q(zeta_2m)/Q) restricted to the real subfield:
// the group (Z/2mZ)^x / <±1>, with the subgroups fixing
//   F = Q(l_2a, l_2b, l_2c)   and   E = Q(l_a, l_b, l_c, l_2a*l_2b*l_2c)
// where l_n = 2cos(2pi/n).  sigma_k fixes l_n iff k = ±1 (mod n); when
// k = ±1 (mod s), sigma_k scales l_2s by the sign eps_s(k) = +1 if
// k = ±1 (mod 2s) and -1 otherwise, so sigma_k fixes the product generator
// iff eps_a eps_b eps_c = +1.  With a = 2 the product generator is l_4 = 0
// and contributes nothing, so its condition is dropped.
struct FieldTowerData {
  Triple triple;
  long long m = 0;      // lcm of (a, b, c)
  long long two_m = 0;  // 2m
  std::vector<long long> reps;  // canonical class reps of (Z/2mZ)^x / ±1, in [1, m]
  std::vector<long long> HE, HF;  // subgroups as sorted rep subsets; HF ⊆ HE
  int degE = 0, degF = 0;
};

FieldTowerData field_tower(const Triple& t);

// Residue data of a rational prime p in E and F, derived from the subgroup
// model: with 2m = p^v * n' (p coprime to n'), inertia is the kernel of
// reduction mod n' and Frobenius is the class of p mod n'.
struct PrimeSplitting {
  long long p = 0;
  int eE = 1, fE = 1, gE = 1;
  int eF = 1, fF = 1;
  u128 qE = 0;  // p^fE (u128: oracle-range inputs can push this past 64 bits)
  int pxl = 1;  // +1 when the residue fields of E and F agree (PSL), else -1
  int degE = 0, degF = 0;
};

PrimeSplitting prime_splitting(const Triple& t, long long p);

// true iff p is unramified in F over E (eE == eF); immediate for p coprime
// to 2abc.
bool dfe_coprime(const Triple& t, long long p);

// Split test via Euler criterion on the reductions of l_s + 2 in F_{qE},
// evaluated in F_p[x]/Phi_2m (all primes above p at once; the conjunction is
// the same at every prime since everything is Galois over Q).  Requires p
// coprime to 2abc; returns +1 (split, PSL) or -1.
int kronecker_split_test(const Triple& t, long long p);

// Discriminant pre-check: true iff some prime above p avoids
// beta = l_2a^2 + l_2b^2 + l_2c^2 + l_2a*l_2b*l_2c - 4, and no entry is a
// proper multiple of p.  Immediate when p is coprime to 2abc.
bool beta_admissible(const Triple& t, long long p);

// Test oracle for the subgroup model: residue degrees recomputed as the lcm
// of Frobenius degrees of the explicit generator reductions in F_p[x]/Phi_n'.
// Sound only for p coprime to 2abc: at ramified primes a generator product
// such as l_8 l_12^2 = 3 sqrt(2) reduces to zero and its reduction no longer
// generates the residue field.
int frobenius_oracle_fE(const Triple& t, long long p);
int frobenius_oracle_fF(const Triple& t, long long p);

// Stronger oracle, valid at every prime: recomputes the fixing subgroups by
// exact integer arithmetic in Z[x]/Phi_2m, testing sigma_k(g) == g literally
// on each generator (the zero product for a = 2 is fixed by everything, so
// no case analysis enters).  Agreement with field_tower validates the
// eps-sign characterization wholesale.
struct SymbolicTower {
  std::vector<long long> HE, HF;  // canonical reps, sorted
};
SymbolicTower field_tower_symbolic(const Triple& t);

}  // namespace tmc

#endif
