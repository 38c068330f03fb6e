#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tmc/check.hpp"
#include "tmc/cycgalois.hpp"
#include "tmc/enumerate.hpp"
#include "tmc/genus.hpp"
#include "tmc/matrep.hpp"
#include "tmc/output.hpp"

namespace {

int run_enumerate(const std::string& family, int genus_max, const std::string& format,
                  bool include_reductions) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<tmc::CurveRecord> recs =
      family == "x0" ? tmc::enumerate_x0(genus_max) : tmc::enumerate_x1(genus_max);
  std::vector<tmc::CatalogEntry> reductions;
  if (include_reductions) reductions = tmc::reduction_catalog();

  if (format == "csv")
    tmc::write_csv(std::cout, recs, reductions);
  else
    tmc::write_json(std::cout, recs, reductions);

  auto hist = tmc::genus_histogram(recs);
  long long total = 0;
  for (auto [g, n] : hist) {
    std::cerr << "genus " << g << ": " << n << "\n";
    total += n;
  }
  std::cerr << "total curves: " << total << " (" << recs.size() << " records)\n";
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "elapsed: " << dt << " s, workers: " << tmc::worker_count() << "\n";
  return 0;
}

int run_genus(int a, int b, int c, long long p, const std::string& family) {
  tmc::Triple t(a, b, c);
  if (!tmc::is_hyperbolic(t)) {
    std::cout << "triple " << t.str() << " is not hyperbolic (chi = " << tmc::chi(t).str()
              << ")\n";
    return 0;
  }
  tmc::PrimeSplitting sp = tmc::prime_splitting(t, p);
  if (sp.qE == 0 || sp.qE > (tmc::u128(1) << 62)) {
    std::cout << "residue cardinality out of range\n";
    return 0;
  }
  long long q = (long long)sp.qE;
  std::cout << "triple " << t.str() << ", p = " << p << "\n";
  std::cout << "q = " << q << ", group = " << (sp.pxl == 1 ? "PSL" : "PGL") << "2(F_" << q
            << "), primes above p: " << sp.gE << ", [E:Q] = " << sp.degE << "\n";

  tmc::AdmissibilityReport rep = tmc::check_admissible(t, p);
  if (!rep.admissible) {
    std::cout << "inadmissible: " << rep.failed_check << "\n";
    return 0;
  }
  std::cout << "admissible\n";
  if (family == "galois") {
    std::cout << "genus = " << tmc::genus_galois(t, tmc::pxl_group_order((tmc::u64)q, sp.pxl))
              << "\n";
  } else if (family == "x1") {
    std::cout << "genus = " << tmc::genus_x1(t, (tmc::u64)q, (tmc::u64)p, sp.pxl) << "\n";
  } else {
    tmc::X0Genus g = tmc::genus_x0(t, (tmc::u64)q, (tmc::u64)p, sp.pxl);
    std::cout << "genus = " << g.genus << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-type triangular modular curve enumerator"};
  app.require_subcommand(1);

  // enumerate
  std::string family = "x0", format = "csv";
  int genus_max = 0;
  bool include_reductions = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate all curves of genus <= bound");
  enum_cmd->add_option("--family", family, "x0 or x1")
      ->check(CLI::IsMember({"x0", "x1"}))
      ->capture_default_str();
  enum_cmd->add_option("--genus-max", genus_max, "genus bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enum_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  enum_cmd->add_flag("--include-reductions", include_reductions,
                     "append the non-hyperbolic reduction families");

  // genus
  std::vector<int> abc;
  long long prime = 0;
  std::string gfamily = "x0";
  auto* genus_cmd = app.add_subcommand("genus", "report one (a,b,c; p) curve");
  genus_cmd->add_option("abc", abc, "triple a b c")->expected(3)->required();
  genus_cmd->add_option("--prime", prime, "rational prime p")->required();
  genus_cmd->add_option("--family", gfamily, "x0, x1 or galois")
      ->check(CLI::IsMember({"x0", "x1", "galois"}))
      ->capture_default_str();

  // check
  std::string level = "quick";
  std::string data_dir = "data";
  auto* check_cmd = app.add_subcommand("check", "run the self-check suites");
  check_cmd->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  check_cmd->add_option("--data-dir", data_dir, "directory with the golden fixtures")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*enum_cmd) return run_enumerate(family, genus_max, format, include_reductions);
    if (*genus_cmd) {
      if (!tmc::is_prime_u64((tmc::u64)prime)) {
        std::cerr << "error: --prime must be a rational prime\n";
        return 1;
      }
      return run_genus(abc[0], abc[1], abc[2], prime, gfamily);
    }
    if (*check_cmd) return tmc::run_checks(level == "full", data_dir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
