#ifndef TMC_ENUMERATE_HPP
#define TMC_ENUMERATE_HPP

#include <map>
#include <string>
#include <vector>

#include "tmc/triples.hpp"

namespace tmc {

// One enumerated curve family member.  A record stands for all conjugate
// primes above p at once: num_primes is their count, so headline curve
// counts are sums of num_primes over records.
struct CurveRecord {
  int family = 0;  // 0 for the Borel quotient, 1 for the unipotent quotient
  Triple t;
  long long p = 0;
  long long q = 0;
  int pxl = 1;
  int num_primes = 1;
  int deg_e = 1;
  long long genus = 0;

  bool operator==(const CurveRecord& o) const;
  bool operator<(const CurveRecord& o) const;  // (genus, a, b, c, p, q)
};

struct AdmissibilityReport {
  bool admissible = false;
  std::string failed_check;  // empty when admissible
};

// Full admissibility: p unramified in F over E, reduced order locally
// maximal, and the generator images keep their exact orders.
AdmissibilityReport check_admissible(const Triple& t, long long p);
bool is_admissible(const Triple& t, long long p);

// All admissible (triple, p) with Borel-quotient genus <= genus_max, sorted
// by (genus, a, b, c, p, q).  `parallel` selects the OpenMP kernel; the
// serial path is the reference implementation and produces identical output.
std::vector<CurveRecord> enumerate_x0(int genus_max, bool parallel = true);

// The unipotent-level sublist: every such curve covers a Borel-quotient
// curve of no larger genus, so it is filtered from enumerate_x0's output.
std::vector<CurveRecord> enumerate_x1(int genus_max, bool parallel = true);

std::map<long long, long long> genus_histogram(const std::vector<CurveRecord>& recs);

// Worker count for the parallel kernel: OpenMP's default, optionally capped
// by the TMC_THREADS environment variable.
int worker_count();

}  // namespace tmc

#endif
