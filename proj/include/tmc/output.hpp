#ifndef TMC_OUTPUT_HPP
#define TMC_OUTPUT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tmc/enumerate.hpp"
#include "tmc/triples.hpp"

namespace tmc {

// Column order is fixed: family,a,b,c,p,q,pxl,num_primes,deg_E,genus.
// Catalog rows carry the family pattern in the a,b,c columns and the literal
// constants of the reduction table.
extern const char* kCsvHeader;

std::string csv_row(const CurveRecord& rec);
std::string csv_row(const CatalogEntry& entry);

void write_csv(std::ostream& os, const std::vector<CurveRecord>& recs,
               const std::vector<CatalogEntry>& reductions);
void write_json(std::ostream& os, const std::vector<CurveRecord>& recs,
                const std::vector<CatalogEntry>& reductions);

// Golden fixture rows: a,b,c,p,q,pxl,num_primes.
struct GoldenRow {
  Triple t;
  long long p, q;
  int pxl;
  int num_primes;
  bool operator<(const GoldenRow& o) const;
  bool operator==(const GoldenRow& o) const;
};

std::vector<GoldenRow> load_golden_csv(const std::string& path);
GoldenRow golden_of(const CurveRecord& rec);

}  // namespace tmc

#endif
