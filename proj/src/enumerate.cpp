#include "tmc/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tmc/cycgalois.hpp"
#include "tmc/genus.hpp"
#include "tmc/matrep.hpp"

namespace tmc {

bool CurveRecord::operator==(const CurveRecord& o) const {
  return family == o.family && t == o.t && p == o.p && q == o.q && pxl == o.pxl &&
         num_primes == o.num_primes && deg_e == o.deg_e && genus == o.genus;
}

bool CurveRecord::operator<(const CurveRecord& o) const {
  if (genus != o.genus) return genus < o.genus;
  if (!(t == o.t)) return t < o.t;
  if (p != o.p) return p < o.p;
  return q < o.q;
}

AdmissibilityReport check_admissible(const Triple& t, long long p) {
  AdmissibilityReport rep;
  if (!is_hyperbolic(t)) {
    rep.failed_check = "triple is not hyperbolic";
    return rep;
  }
  if (!dfe_coprime(t, p)) {
    rep.failed_check = "p ramifies in F over E";
    return rep;
  }
  TripleRep m = build_representation(t, p);
  if (!m.orders_ok) {
    rep.failed_check = m.note.empty() ? "generator order collapsed" : m.note;
    return rep;
  }
  if (!m.locally_maximal) {
    rep.failed_check = m.note.empty() ? "reduced order not locally maximal (discrd)" : m.note;
    return rep;
  }
  rep.admissible = true;
  return rep;
}

bool is_admissible(const Triple& t, long long p) { return check_admissible(t, p).admissible; }

int worker_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("TMC_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

namespace {

struct WorkItem {
  Triple t;
  long long p;
  u64 q;
  unsigned r;
};

std::vector<std::pair<u64, u64>> prime_powers_up_to(u64 bound) {
  std::vector<std::pair<u64, u64>> qs;  // (q, p)
  for (u64 p = 2; p <= bound; ++p) {
    if (!is_prime_u64(p)) continue;
    for (u64 q = p; q <= bound; q *= p) {
      qs.push_back({q, p});
      if (q > bound / p) break;
    }
  }
  std::sort(qs.begin(), qs.end());
  return qs;
}

// The per-cell kernel: all filters beyond q-admissibility and the chi bound.
std::optional<CurveRecord> process_cell(const WorkItem& w, int genus_max) {
  if (!beta_admissible(w.t, w.p)) return std::nullopt;
  PrimeSplitting sp = prime_splitting(w.t, w.p);
  if ((unsigned)sp.fE != w.r) return std::nullopt;  // residue cardinality is p^fE, not q
  X0Genus g;
  try {
    g = genus_x0(w.t, w.q, (u64)w.p, sp.pxl);
  } catch (const std::domain_error&) {
    return std::nullopt;  // non-integral candidate genus: no such curve
  }
  if (g.genus > genus_max) return std::nullopt;
  if (!dfe_coprime(w.t, w.p)) return std::nullopt;
  TripleRep rep = build_representation(w.t, w.p);
  if (!rep.orders_ok || !rep.locally_maximal) return std::nullopt;

  CurveRecord rec;
  rec.family = 0;
  rec.t = w.t;
  rec.p = w.p;
  rec.q = (long long)w.q;
  rec.pxl = sp.pxl;
  rec.num_primes = sp.gE;
  rec.deg_e = sp.degE;
  rec.genus = g.genus;
  return rec;
}

}  // namespace

std::vector<CurveRecord> enumerate_x0(int genus_max, bool parallel) {
  if (genus_max < 0) throw std::invalid_argument("enumerate_x0: genus bound must be >= 0");

  std::vector<WorkItem> items;
  for (auto [q, p] : prime_powers_up_to(q_bound(genus_max))) {
    unsigned r = 0;
    for (u64 v = 1; v < q; v *= p) ++r;
    r = r == 0 ? 1 : r;
    for (const Triple& t : generate_candidates(q, p, genus_max))
      items.push_back(WorkItem{t, (long long)p, q, r});
  }

  std::vector<std::optional<CurveRecord>> results(items.size());
  if (parallel) {
#ifdef _OPENMP
    omp_set_num_threads(worker_count());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)items.size(); ++i) results[i] = process_cell(items[i], genus_max);
#else
    for (size_t i = 0; i < items.size(); ++i) results[i] = process_cell(items[i], genus_max);
#endif
  } else {
    for (size_t i = 0; i < items.size(); ++i) results[i] = process_cell(items[i], genus_max);
  }

  std::vector<CurveRecord> out;
  for (const auto& r : results)
    if (r) out.push_back(*r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveRecord> enumerate_x1(int genus_max, bool parallel) {
  std::vector<CurveRecord> out;
  for (const CurveRecord& rec : enumerate_x0(genus_max, parallel)) {
    long long g1 = genus_x1(rec.t, (u64)rec.q, (u64)rec.p, rec.pxl);
    if (g1 > genus_max) continue;
    CurveRecord r1 = rec;
    r1.family = 1;
    r1.genus = g1;
    out.push_back(r1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<long long, long long> genus_histogram(const std::vector<CurveRecord>& recs) {
  std::map<long long, long long> h;
  for (const auto& r : recs) h[r.genus] += r.num_primes;
  return h;
}

}  // namespace tmc
