#ifndef TMC_MATREP_HPP
#define TMC_MATREP_HPP

#include <memory>
#include <string>
#include <vector>

#include "tmc/cycgalois.hpp"
#include "tmc/ffarith.hpp"
#include "tmc/triples.hpp"

namespace tmc {

// Process-wide cache of field contexts, fully initialized (generator forced)
// before publication so shared instances are safe to read concurrently.
std::shared_ptr<const Fq> get_field(u64 p, unsigned r);

// A small residue field F_q (q bounded by the enumeration range) with dense
// arithmetic tables indexed by element code; this is the field the coset
// actions run over.
struct SmallField {
  std::shared_ptr<const Fq> field;
  u64 p = 0;
  unsigned r = 0;
  int q = 0;
  std::vector<int> mul, add;     // q*q, code-indexed
  std::vector<int> neg, invt;    // invt[0] = -1
  std::vector<int> sqrt_;        // some square root, -1 if none
  std::vector<char> issq;        // nonzero squares and 0
  int nonsquare = -1;            // smallest non-square code (odd q), else -1

  int m(int a, int b) const { return mul[(size_t)a * q + b]; }
  int s(int a, int b) const { return add[(size_t)a * q + b]; }
};

std::shared_ptr<const SmallField> small_field(u64 p, unsigned r);

// 2x2 matrix over a SmallField, row-major, entries by element code.
struct KMat {
  int e[4] = {0, 0, 0, 0};
  bool operator==(const KMat& o) const {
    return e[0] == o.e[0] && e[1] == o.e[1] && e[2] == o.e[2] && e[3] == o.e[3];
  }
};

KMat km_mul(const SmallField& F, const KMat& x, const KMat& y);
int km_det(const SmallField& F, const KMat& x);
bool km_is_scalar(const SmallField& F, const KMat& x);
// Projective canonical form: divide by the first nonzero entry.
KMat km_normalize(const SmallField& F, const KMat& x);

// Least n >= 1 with x^n scalar; throws past the cap.
int projective_order(const SmallField& F, const KMat& x, int cap);

// Orbit lengths (sorted) of x acting on P^1(F_q) by left multiplication.
std::vector<int> p1_cycle_type(const SmallField& F, const KMat& x);

// Orbit lengths (sorted) of x on G/H_1 for G = PXL_2(F_q), H_1 the upper
// unipotent subgroup.  Cosets are parametrized by the first column up to
// sign, with an extra determinant square-class coordinate in the PGL case.
std::vector<int> h1_cycle_type(const SmallField& F, const KMat& x, int pxl);

// The matrix realization of the generator triple at a prime above p, plus
// the local maximality data of the reduced order span.
struct TripleRep {
  Triple t;
  long long p = 0;
  PrimeSplitting split;

  bool orders_ok = false;  // projective orders equal (a, b, c)
  int ord_a = 0, ord_b = 0, ord_c = 0;

  bool locally_maximal = false;  // span has dimension 4 with unit Gram det

  // images of the generators in PGL_2(F_qE), available when locally_maximal
  bool have_matrices = false;
  std::shared_ptr<const SmallField> K;
  KMat Pa, Pb, Pc;

  std::string note;  // diagnostic on any failed stage
};

// Builds the trace-triple realization over F_{p^{2 fF}} at a prime where the
// discriminant generator does not vanish, checks the generator orders, spans
// the reduced order, and (when the span is a full matrix algebra) rewrites
// the generators as matrices over the residue field of E.
TripleRep build_representation(const Triple& t, long long p);

// a = 2, q odd: whether the order-2 generator image is split semisimple
// (two fixed points on P^1 rather than none).
bool sigma2_is_split(const TripleRep& rep);

bool order_locally_maximal(const Triple& t, long long p);

}  // namespace tmc

#endif
