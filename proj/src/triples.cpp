#include "tmc/triples.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tmc {

Triple::Triple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (a < 2) throw std::invalid_argument("Triple: entries must be >= 2");
  if (c > (1 << 20)) throw std::invalid_argument("Triple: entry too large");
}

bool Triple::operator<(const Triple& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

long long Triple::lcm() const {
  long long m = std::lcm((long long)a, (long long)b);
  return std::lcm(m, (long long)c);
}

std::string Triple::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Rational chi(const Triple& t) {
  return Rational(1, t.a) + Rational(1, t.b) + Rational(1, t.c) - Rational(1);
}

bool is_hyperbolic(const Triple& t) { return chi(t) < Rational(0); }

bool q_admissible(const Triple& t, u64 q, u64 p) {
  for (int s : {t.a, t.b, t.c}) {
    u64 su = (u64)s;
    if ((q - 1) % su == 0 || su == p || (q + 1) % su == 0) continue;
    return false;
  }
  return true;
}

std::vector<Triple> generate_candidates(u64 q, u64 p, int genus_max) {
  std::set<int> pool;
  for (u64 s = 2; s <= q + 1; ++s) {
    if ((q - 1) % s == 0 || (q + 1) % s == 0) pool.insert((int)s);
  }
  pool.insert((int)p);
  Rational bound(2 * (genus_max + 1), (long long)(q - 1));

  std::vector<int> v(pool.begin(), pool.end());
  std::vector<Triple> out;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i; j < v.size(); ++j)
      for (size_t k = j; k < v.size(); ++k) {
        Triple t(v[i], v[j], v[k]);
        Rational x = chi(t);
        if (!(x < Rational(0))) continue;
        if ((-x) > bound) continue;
        out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

int delta_mod_delta2(const Triple& t) {
  int odd = (t.a % 2) + (t.b % 2) + (t.c % 2);
  if (odd >= 2) return 0;
  if (odd == 1) return 1;
  return 2;
}

// ---- non-hyperbolic reduction catalog ----

namespace {

// s = base * 2^k (or 3^k, 5^k); returns k >= 0, or -1 if not of that shape
int power_cofactor(long long s, long long base, long long radix) {
  if (s <= 0 || s % base != 0) return -1;
  long long rest = s / base;
  int k = 0;
  while (rest % radix == 0) {
    rest /= radix;
    ++k;
  }
  return rest == 1 ? k : -1;
}

bool is_inf(int s) { return s == kInfinity; }

struct Pat {
  int family;
  const char* pattern;
  long long p, q;
  int pxl;
  int deg_e;
  // matcher over the sorted-finite-first entries
  bool (*match)(int, int, int);
};

// family 1: p=2, q=2
bool f1a(int a, int b, int c) {  // (2^ka, 2^kb, 3*2^kc), 1 <= ka < kb
  // entries may arrive in any sorted order; try each slot as the 3*2^kc one
  int e[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (is_inf(e[i])) return false;
    if (power_cofactor(e[i], 3, 2) < 0) continue;
    int x = e[(i + 1) % 3], y = e[(i + 2) % 3];
    if (is_inf(x) || is_inf(y)) continue;
    int ka = power_cofactor(x, 1, 2), kb = power_cofactor(y, 1, 2);
    if (ka > kb) std::swap(ka, kb);
    if (ka >= 1 && ka < kb) return true;
  }
  return false;
}
bool f1b(int a, int b, int c) {  // (3*2^kc, inf, inf)
  return is_inf(b) && is_inf(c) && !is_inf(a) && power_cofactor(a, 3, 2) >= 0;
}
bool f1c(int a, int b, int c) {  // (2^ka, 3*2^kc, inf)
  if (!is_inf(c) || is_inf(a) || is_inf(b)) return false;
  for (int i = 0; i < 2; ++i) {
    int x = i ? b : a, y = i ? a : b;
    if (power_cofactor(x, 1, 2) >= 1 && power_cofactor(y, 3, 2) >= 0) return true;
  }
  return false;
}

// family 2: p=3, q=3
bool f2a(int a, int b, int c) {  // (3^ka, 3^kb, 3^kc), 1 <= ka <= kb < kc
  int ka = power_cofactor(a, 1, 3), kb = power_cofactor(b, 1, 3), kc = power_cofactor(c, 1, 3);
  if (ka < 0 || kb < 0 || kc < 0) return false;
  int k[3] = {ka, kb, kc};
  std::sort(k, k + 3);
  return k[0] >= 1 && k[1] < k[2];
}
bool f2b(int a, int b, int c) {  // (3^ka, inf, inf)
  return is_inf(b) && is_inf(c) && power_cofactor(a, 1, 3) >= 1;
}
bool f2c(int a, int b, int c) {  // (3^ka, 3^kb, inf)
  return !is_inf(a) && !is_inf(b) && is_inf(c) && power_cofactor(a, 1, 3) >= 1 &&
         power_cofactor(b, 1, 3) >= 1;
}
bool f2d(int a, int b, int c) { return is_inf(a) && is_inf(b) && is_inf(c); }

// family 3: p=3, q=3; (2*3^ka, 3^kb, 3^kc), 1 <= kb <= kc, ka*kb*kc != 1
bool f3a(int a, int b, int c) {
  int e[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    int ka = power_cofactor(e[i], 2, 3);
    if (ka < 0) continue;
    int kb = power_cofactor(e[(i + 1) % 3], 1, 3);
    int kc = power_cofactor(e[(i + 2) % 3], 1, 3);
    if (kb < 0 || kc < 0) continue;
    if (kb > kc) std::swap(kb, kc);
    if (kb >= 1 && ka * kb * kc != 1) return true;
  }
  return false;
}
bool f3b(int a, int b, int c) {  // (2*3^ka, 3^kb, inf)
  if (!is_inf(c) || is_inf(a) || is_inf(b)) return false;
  for (int i = 0; i < 2; ++i) {
    int x = i ? b : a, y = i ? a : b;
    int ka = power_cofactor(x, 2, 3), kb = power_cofactor(y, 1, 3);
    if (ka >= 0 && kb >= 1 && ka * kb != 1) return true;
  }
  return false;
}
bool f3c(int a, int b, int c) {  // (2*3^ka, inf, inf)
  return is_inf(b) && is_inf(c) && power_cofactor(a, 2, 3) >= 0;
}

// family 4: p=3, q=3, PGL; (2*3^ka, 3^kb, 4*3^kc), 1 <= kb, ka*kb*kc != 1
bool f4a(int a, int b, int c) {
  int e[3] = {a, b, c};
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pm : perm) {
    int ka = power_cofactor(e[pm[0]], 2, 3);
    int kb = power_cofactor(e[pm[1]], 1, 3);
    int kc = power_cofactor(e[pm[2]], 4, 3);
    if (ka >= 0 && kb >= 1 && kc >= 0 && ka * kb * kc != 1) return true;
  }
  return false;
}
bool f4b(int a, int b, int c) {  // (2*3^ka, 4*3^kb, inf)
  if (!is_inf(c) || is_inf(a) || is_inf(b)) return false;
  for (int i = 0; i < 2; ++i) {
    int x = i ? b : a, y = i ? a : b;
    int ka = power_cofactor(x, 2, 3), kb = power_cofactor(y, 4, 3);
    if (ka >= 0 && kb >= 0 && ka * kb != 1) return true;
  }
  return false;
}

// family 5: p=2, q=4; (2^ka, 3*2^kb, 5*2^kc), 1 <= ka, ka*kb*kc != 1
bool f5a(int a, int b, int c) {
  int e[3] = {a, b, c};
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pm : perm) {
    int ka = power_cofactor(e[pm[0]], 1, 2);
    int kb = power_cofactor(e[pm[1]], 3, 2);
    int kc = power_cofactor(e[pm[2]], 5, 2);
    if (ka >= 1 && kb >= 0 && kc >= 0 && ka * kb * kc != 1) return true;
  }
  return false;
}
bool f5b(int a, int b, int c) {  // (3*2^kb, 5*2^kc, inf)
  if (!is_inf(c) || is_inf(a) || is_inf(b)) return false;
  for (int i = 0; i < 2; ++i) {
    int x = i ? b : a, y = i ? a : b;
    int kb = power_cofactor(x, 3, 2), kc = power_cofactor(y, 5, 2);
    if (kb >= 0 && kc >= 0 && kb * kc != 1) return true;
  }
  return false;
}

// family 6: p=5, q=5; (2*5^ka, 3*5^kb, 5^kc), 1 <= kc, ka*kb*kc != 1
bool f6a(int a, int b, int c) {
  int e[3] = {a, b, c};
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pm : perm) {
    int ka = power_cofactor(e[pm[0]], 2, 5);
    int kb = power_cofactor(e[pm[1]], 3, 5);
    int kc = power_cofactor(e[pm[2]], 1, 5);
    if (ka >= 0 && kb >= 0 && kc >= 1 && ka * kb * kc != 1) return true;
  }
  return false;
}
bool f6b(int a, int b, int c) {  // (2*5^ka, 3*5^kb, inf)
  if (!is_inf(c) || is_inf(a) || is_inf(b)) return false;
  for (int i = 0; i < 2; ++i) {
    int x = i ? b : a, y = i ? a : b;
    int ka = power_cofactor(x, 2, 5), kb = power_cofactor(y, 3, 5);
    if (ka >= 0 && kb >= 0 && ka * kb != 1) return true;
  }
  return false;
}

const Pat kPatterns[] = {
    {1, "(2^j, 2^k, 3*2^l) 1<=j<k", 2, 2, 1, 1, f1a},
    {1, "(3*2^l, inf, inf)", 2, 2, 1, 1, f1b},
    {1, "(2^j, 3*2^l, inf) 1<=j", 2, 2, 1, 1, f1c},
    {2, "(3^j, 3^k, 3^l) 1<=j<=k<l", 3, 3, 1, 1, f2a},
    {2, "(3^j, inf, inf) 1<=j", 3, 3, 1, 1, f2b},
    {2, "(3^j, 3^k, inf) 1<=j,k", 3, 3, 1, 1, f2c},
    {2, "(inf, inf, inf)", 3, 3, 1, 1, f2d},
    {3, "(2*3^j, 3^k, 3^l) 1<=k<=l, jkl!=1", 3, 3, 1, 1, f3a},
    {3, "(2*3^j, 3^k, inf) 1<=k, jk!=1", 3, 3, 1, 1, f3b},
    {3, "(2*3^j, inf, inf)", 3, 3, 1, 1, f3c},
    {4, "(2*3^j, 3^k, 4*3^l) 1<=k, jkl!=1", 3, 3, -1, 1, f4a},
    {4, "(2*3^j, 4*3^k, inf) jk!=1", 3, 3, -1, 1, f4b},
    {5, "(2^j, 3*2^k, 5*2^l) 1<=j, jkl!=1", 2, 4, 1, 2, f5a},
    {5, "(3*2^k, 5*2^l, inf) kl!=1", 2, 4, 1, 2, f5b},
    {6, "(2*5^j, 3*5^k, 5^l) 1<=l, jkl!=1", 5, 5, 1, 2, f6a},
    {6, "(2*5^j, 3*5^k, inf) jk!=1", 5, 5, 1, 2, f6b},
};

}  // namespace

std::optional<CatalogEntry> nonhyperbolic_reduction(const CatalogTriple& t, long long p,
                                                    long long q) {
  // normalize: finite entries ascending, infinities last
  int e[3] = {t.a, t.b, t.c};
  std::sort(e, e + 3, [](int x, int y) {
    if (is_inf(x)) return false;
    if (is_inf(y)) return true;
    return x < y;
  });
  for (const auto& pat : kPatterns) {
    if (pat.p != p || pat.q != q) continue;
    if (pat.match(e[0], e[1], e[2]))
      return CatalogEntry{pat.family, pat.pattern, pat.p, pat.q, pat.pxl, pat.deg_e, 0};
  }
  return std::nullopt;
}

std::vector<CatalogEntry> reduction_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& pat : kPatterns)
    out.push_back(CatalogEntry{pat.family, pat.pattern, pat.p, pat.q, pat.pxl, pat.deg_e, 0});
  return out;
}

}  // namespace tmc
