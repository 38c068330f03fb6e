#include "tmc/output.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tmc {

const char* kCsvHeader = "family,a,b,c,p,q,pxl,num_primes,deg_E,genus";

std::string csv_row(const CurveRecord& rec) {
  std::ostringstream os;
  os << (rec.family == 0 ? "x0" : "x1") << ',' << rec.t.a << ',' << rec.t.b << ',' << rec.t.c
     << ',' << rec.p << ',' << rec.q << ',' << rec.pxl << ',' << rec.num_primes << ','
     << rec.deg_e << ',' << rec.genus;
  return os.str();
}

std::string csv_row(const CatalogEntry& entry) {
  std::ostringstream os;
  os << "reduction," << '"' << entry.pattern << '"' << ",," << ',' << entry.p << ',' << entry.q
     << ',' << entry.pxl << ",," << entry.deg_e << ',' << entry.genus;
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<CurveRecord>& recs,
               const std::vector<CatalogEntry>& reductions) {
  os << kCsvHeader << '\n';
  for (const auto& r : recs) os << csv_row(r) << '\n';
  for (const auto& e : reductions) os << csv_row(e) << '\n';
}

void write_json(std::ostream& os, const std::vector<CurveRecord>& recs,
                const std::vector<CatalogEntry>& reductions) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : recs) {
    out.push_back({{"family", r.family == 0 ? "x0" : "x1"},
                   {"a", r.t.a},
                   {"b", r.t.b},
                   {"c", r.t.c},
                   {"p", r.p},
                   {"q", r.q},
                   {"pxl", r.pxl},
                   {"num_primes", r.num_primes},
                   {"deg_E", r.deg_e},
                   {"genus", r.genus}});
  }
  for (const auto& e : reductions) {
    out.push_back({{"family", "reduction"},
                   {"pattern", e.pattern},
                   {"p", e.p},
                   {"q", e.q},
                   {"pxl", e.pxl},
                   {"deg_E", e.deg_e},
                   {"genus", e.genus},
                   {"reduction", true}});
  }
  os << out.dump(2) << '\n';
}

bool GoldenRow::operator<(const GoldenRow& o) const {
  if (!(t == o.t)) return t < o.t;
  if (p != o.p) return p < o.p;
  if (q != o.q) return q < o.q;
  if (pxl != o.pxl) return pxl < o.pxl;
  return num_primes < o.num_primes;
}

bool GoldenRow::operator==(const GoldenRow& o) const {
  return t == o.t && p == o.p && q == o.q && pxl == o.pxl && num_primes == o.num_primes;
}

std::vector<GoldenRow> load_golden_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden fixture: " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("a,", 0) == 0) continue;  // header
    }
    std::istringstream ls(line);
    std::string tok;
    long long v[7];
    for (int i = 0; i < 7; ++i) {
      if (!std::getline(ls, tok, ',')) throw std::runtime_error("bad golden row: " + line);
      v[i] = std::stoll(tok);
    }
    GoldenRow r{Triple((int)v[0], (int)v[1], (int)v[2]), v[3], v[4], (int)v[5], (int)v[6]};
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

GoldenRow golden_of(const CurveRecord& rec) {
  return GoldenRow{rec.t, rec.p, rec.q, rec.pxl, rec.num_primes};
}

}  // namespace tmc
