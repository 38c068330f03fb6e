// Acceptance suite: runs every headline requirement end to end and prints one
// PASS/FAIL line per criterion.  Exits 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "tmc/check.hpp"
#include "tmc/cycgalois.hpp"
#include "tmc/enumerate.hpp"
#include "tmc/genus.hpp"
#include "tmc/matrep.hpp"
#include "tmc/output.hpp"

using namespace tmc;

namespace {

int failures = 0;

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int idx, const char* name, bool pass, const std::string& detail, double secs) {
  std::printf("[%d/7] %-28s %s (%.1f s)%s%s\n", idx, name, pass ? "PASS" : "FAIL", secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : "data";

  // ---- 1. headline counts: 69/248/453 and 6/9/11 ----
  double t0 = now();
  auto x0 = enumerate_x0(2);
  auto x1 = enumerate_x1(2);
  double t_enum = now() - t0;
  {
    auto h0 = genus_histogram(x0);
    auto h1 = genus_histogram(x1);
    std::string detail;
    bool ok = true;
    const long long want0[3] = {69, 248, 453}, want1[3] = {6, 9, 11};
    for (int g = 0; g < 3; ++g) {
      if (h0[g] != want0[g] || h1[g] != want1[g]) ok = false;
    }
    detail = "x0: " + std::to_string(h0[0]) + "/" + std::to_string(h0[1]) + "/" +
             std::to_string(h0[2]) + ", x1: " + std::to_string(h1[0]) + "/" +
             std::to_string(h1[1]) + "/" + std::to_string(h1[2]);
    // runtime target: well under the reference 1110 s for the full bound
    if (t_enum > 1110.0) {
      ok = false;
      detail += " (too slow)";
    }
    report(1, "headline counts", ok, detail, t_enum);
  }

  // ---- 2. golden tables, genus 0 and 1, exact row sets ----
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g <= 1; ++g) {
      auto want = load_golden_csv(data_dir + (g == 0 ? "/x0_genus0.csv" : "/x0_genus1.csv"));
      std::vector<GoldenRow> got;
      for (const auto& r : x0)
        if (r.genus == g) got.push_back(golden_of(r));
      std::sort(got.begin(), got.end());
      if (!(got == want)) {
        ok = false;
        detail += " genus-" + std::to_string(g) + " mismatch (" + std::to_string(got.size()) +
                  " vs " + std::to_string(want.size()) + " rows)";
      }
    }
    // spot rows named in the criterion
    std::set<std::tuple<int, int, int, long long>> keys;
    for (const auto& r : x0) keys.insert({r.t.a, r.t.b, r.t.c, r.p});
    if (!keys.count({2, 3, 7, 43}) || !keys.count({2, 5, 11, 11})) {
      ok = false;
      detail += " spot rows missing";
    }
    report(2, "golden tables", ok, detail, now() - t0);
  }

  // ---- 3. Galois case: no genus <= 2 cover; Klein quartic at (2,3,7) ----
  // The inequality chain forces q < 6 and entries <= 7; the few candidates
  // with an integral small genus must all fail to be realized: no admissible
  // prime has that residue cardinality and splitting type.
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    for (u64 q : {2, 3, 4, 5}) {
      u64 p = (q == 4) ? 2 : q;
      for (int a = 2; a <= 7; ++a)
        for (int b = a; b <= 7; ++b)
          for (int c = b; c <= 7; ++c) {
            Triple t(a, b, c);
            if (!is_hyperbolic(t) || !q_admissible(t, q, p)) continue;
            for (int pxl : {+1, -1}) {
              Rational g = Rational(1) -
                           Rational((long long)pxl_group_order(q, pxl)) * chi(t) / Rational(2);
              if (!g.is_integer() || g.num < 0 || g.num > 2) continue;
              PrimeSplitting sp = prime_splitting(t, (long long)p);
              bool realized = sp.qE == q && sp.pxl == pxl && is_admissible(t, (long long)p);
              if (realized) {
                ok = false;
                detail = t.str() + " q=" + std::to_string(q) + " realizes genus " +
                         std::to_string(g.num);
              }
            }
          }
    }
    if (genus_galois(Triple(2, 3, 7), 168) != 3) {
      ok = false;
      detail += " Klein genus wrong";
    }
    report(3, "galois small-genus scan", ok, detail, now() - t0);
  }

  // ---- 4. cycle-structure oracle over the full genus <= 1 run ----
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (const auto& rec : x0) {
      if (rec.genus > 1) continue;
      TripleRep rep = build_representation(rec.t, rec.p);
      long long g1 = genus_x1(rec.t, (u64)rec.q, (u64)rec.p, rec.pxl);
      std::string err = verify_cycle_types(rep, rec.genus, g1, true);
      if (!err.empty()) {
        ok = false;
        detail = err;
        break;
      }
      ++checked;
    }
    double secs = now() - t0;
    if (secs > 300.0) {
      ok = false;
      detail += " (over the 5 minute budget)";
    }
    report(4, "cycle-structure oracle", ok,
           ok ? std::to_string(checked) + " records checked" : detail, secs);
  }

  // ---- 5. residue-degree oracle, lcm <= 60, p <= 100 ----
  // Two independent recomputations: the finite-field reduction-degree oracle
  // wherever it is sound (p coprime to 2abc; generator reductions can
  // degenerate at ramified primes), and the exact symbolic fixing-subgroup
  // oracle for every tower, which pins the residue data at all primes.
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    long long cells = 0, towers = 0;
    for (int a = 2; a <= 60 && ok; ++a)
      for (int b = a; b <= 60 && ok; ++b) {
        if (std::lcm((long long)a, (long long)b) > 60) continue;
        for (int c = b; c <= 60 && ok; ++c) {
          Triple t(a, b, c);
          if (t.lcm() > 60) continue;
          auto tow = field_tower(t);
          auto sym = field_tower_symbolic(t);
          ++towers;
          if (tow.HE != sym.HE || tow.HF != sym.HF) {
            ok = false;
            detail = t.str() + ": symbolic subgroups differ";
            break;
          }
          for (long long p = 2; p <= 100; ++p) {
            if (!is_prime_u64((u64)p) || t.product2() % p == 0) continue;
            PrimeSplitting sp = prime_splitting(t, p);
            ++cells;
            if (frobenius_oracle_fE(t, p) != sp.fE || frobenius_oracle_fF(t, p) != sp.fF) {
              ok = false;
              detail = t.str() + " p=" + std::to_string(p);
              break;
            }
          }
        }
      }
    report(5, "residue-degree oracle", ok,
           ok ? std::to_string(cells) + " cells, " + std::to_string(towers) + " towers"
              : detail,
           now() - t0);
  }

  // ---- 6. half-correction consistency on every a = 2, q odd record ----
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (const auto& rec : x0) {
      if (rec.t.a != 2 || rec.q % 2 == 0) continue;
      TripleRep rep = build_representation(rec.t, rec.p);
      std::string err = verify_epsilon(rep);
      if (!err.empty()) {
        ok = false;
        detail = err;
        break;
      }
      ++checked;
    }
    report(6, "epsilon consistency", ok,
           ok ? std::to_string(checked) + " records checked" : detail, now() - t0);
  }

  // ---- 7. bound sanity over the full run ----
  t0 = now();
  {
    bool ok = true;
    std::string detail;
    for (const auto& rec : x0) {
      if ((u64)rec.q > q_bound(2)) {
        ok = false;
        detail = "q=" + std::to_string(rec.q);
      }
      if (chi(rec.t).abs() > chi_bound((u64)rec.q, 2)) {
        ok = false;
        detail = "chi bound: " + rec.t.str();
      }
    }
    report(7, "level and chi bounds", ok, detail, now() - t0);
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
