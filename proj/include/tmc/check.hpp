#ifndef TMC_CHECK_HPP
#define TMC_CHECK_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tmc/enumerate.hpp"
#include "tmc/matrep.hpp"

namespace tmc {

// Compares the brute-force orbit decompositions of the generator images on
// P^1 (and, when also_h1, on the unipotent coset space) against the closed
// forms for split/unipotent/non-split elements, and re-derives both genera
// through Riemann-Hurwitz from the observed cycle types.  Returns an empty
// string on success and a diagnostic otherwise.
std::string verify_cycle_types(const TripleRep& rep, long long expected_g0,
                               long long expected_g1, bool also_h1);

// a = 2, q odd: the parity determination of the half-correction term must
// match the explicit split/non-split decision, and the q mod 4 rule when the
// group is PSL.  Empty on success.
std::string verify_epsilon(const TripleRep& rep);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The self-check suites behind `check --level quick|full`.
std::vector<CheckResult> check_suite(bool full, const std::string& data_dir);

// Prints one line per check; returns 0 if all pass, 2 otherwise.
int run_checks(bool full, const std::string& data_dir, std::ostream& os);

}  // namespace tmc

#endif
