#ifndef TMC_TRIPLES_HPP
#define TMC_TRIPLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmc/ints.hpp"
#include "tmc/rational.hpp"

namespace tmc {

// A triple (a, b, c) of rotation orders, normalized a <= b <= c, entries >= 2.
// The enumeration domain is finite triples; the symbolic infinity entries of
// the non-hyperbolic reduction catalog are handled separately (CatalogEntry).
struct Triple {
  int a = 2, b = 2, c = 2;

  Triple() = default;
  Triple(int a_, int b_, int c_);

  bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Triple& o) const;

  long long lcm() const;
  long long product2() const { return 2LL * a * b * c; }
  std::string str() const;
};

// chi(a,b,c) = 1/a + 1/b + 1/c - 1; hyperbolic iff negative.
Rational chi(const Triple& t);
bool is_hyperbolic(const Triple& t);

// Each of a, b, c divides one of {q-1, p, q+1} (the possible element orders
// in PXL_2(F_q)); s | p with s >= 2 forces s = p.
bool q_admissible(const Triple& t, u64 q, u64 p);

// All normalized hyperbolic q-admissible triples with |chi| <= 2(g0+1)/(q-1),
// sorted; the entry pool is the divisors >= 2 of q-1 and q+1 together with p.
std::vector<Triple> generate_candidates(u64 q, u64 p, int genus_max);

// Rank of Delta/Delta^(2) as an elementary abelian 2-group: 0 if at least two
// entries are odd, 1 if exactly one is odd, 2 if all are even.
int delta_mod_delta2(const Triple& t);

// ---- catalog of hyperbolic triples reducing to non-hyperbolic triples ----

constexpr int kInfinity = -1;  // symbolic entry marker for the catalog only

struct CatalogTriple {
  int a, b, c;  // kInfinity allowed
};

struct CatalogEntry {
  int family;           // 1..6
  std::string pattern;  // human-readable family pattern
  long long p, q;
  int pxl;  // the sign as listed
  int deg_e;
  long long genus;  // always 0
};

// Pattern-matches (a, b, c; p, q) against the six catalog families; entries
// may be kInfinity.  Returns the catalog record on match.
std::optional<CatalogEntry> nonhyperbolic_reduction(const CatalogTriple& t, long long p,
                                                    long long q);

// The 17 family patterns with their constants, for --include-reductions output.
std::vector<CatalogEntry> reduction_catalog();

}  // namespace tmc

#endif
