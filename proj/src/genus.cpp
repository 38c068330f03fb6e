#include "tmc/genus.hpp"

#include <stdexcept>
#include <string>

namespace tmc {

long long genus_galois(const Triple& t, u128 group_order) {
  if (group_order == 0 || (group_order >> 60))
    throw std::domain_error("genus_galois: group order out of range");
  Rational g = Rational(1) - Rational((long long)group_order) * chi(t) / Rational(2);
  if (!g.is_integer() || g.num < 0)
    throw std::domain_error("genus_galois: genus not a nonnegative integer");
  return g.num;
}

namespace {

// k_s for unambiguous s (s >= 3, or s = 2 in even characteristic)
long long ks_value(long long s, u64 q, u64 p) {
  if ((u64)s == p) return (long long)(q / p);
  if ((q - 1) % (u64)s == 0) return (long long)((q - 1) / (u64)s);
  if ((q + 1) % (u64)s == 0) return (long long)((q + 1) / (u64)s);
  throw std::domain_error("genus: triple is not q-admissible (s = " + std::to_string(s) + ")");
}

}  // namespace

X0Genus genus_x0(const Triple& t, u64 q, u64 p, int pxl, std::optional<bool> split2) {
  if (!q_admissible(t, q, p)) throw std::domain_error("genus_x0: not q-admissible");

  // 2g - 2 = -2(q+1) + sum_s k_s (s-1)
  long long rhs = -2 * ((long long)q + 1);
  bool ambiguous = (t.a == 2 && q % 2 == 1);
  for (int s : {t.a, t.b, t.c})
    if (!(s == 2 && ambiguous)) rhs += ks_value(s, q, p) * (s - 1);

  X0Genus out{};
  if (!ambiguous) {
    out.k2 = (t.a == 2) ? ks_value(2, q, p) : 0;
    out.eps_half = false;
    if ((rhs + 2) % 2 != 0) throw std::domain_error("genus_x0: non-integral genus");
    out.genus = (rhs + 2) / 2;
  } else {
    // k_2 is (q-1)/2 or (q+1)/2; exactly one parity makes g integral
    long long lo = (long long)((q - 1) / 2), hi = (long long)((q + 1) / 2);
    bool lo_ok = ((rhs + lo) % 2) == 0;
    bool hi_ok = ((rhs + hi) % 2) == 0;
    if (lo_ok == hi_ok) throw std::logic_error("genus_x0: integrality did not decide k_2");
    out.k2 = lo_ok ? lo : hi;
    out.eps_half = !lo_ok;
    out.genus = (rhs + out.k2 + 2) / 2;
    if (split2.has_value()) {
      // split order-2 element has two fixed points, so k_2 = (q-1)/2
      bool split_expected = !out.eps_half;
      if (*split2 != split_expected)
        throw std::domain_error("genus_x0: split2 inconsistent with integrality");
    }
    if (pxl == +1) {
      // in the PSL case the correction vanishes exactly when q = 1 (mod 4)
      bool eps_zero_expected = (q % 4 == 1);
      if (out.eps_half == eps_zero_expected)
        throw std::logic_error("genus_x0: PSL parity rule violated");
    }
  }
  if (out.genus < 0) throw std::logic_error("genus_x0: negative genus");
  return out;
}

long long genus_x1(const Triple& t, u64 q, u64 p, int pxl) {
  if (!q_admissible(t, q, p)) throw std::domain_error("genus_x1: not q-admissible");
  if (q > (u64(1) << 31)) throw std::domain_error("genus_x1: q out of range");
  bool pgl_shape = (pxl == -1) || (q % 2 == 0);  // PSL = PGL in even characteristic
  long long index = pgl_shape ? (long long)(q * q - 1) : (long long)((q * q - 1) / 2);

  long long rhs = -2 * index;
  for (int s : {t.a, t.b, t.c}) {
    long long k;
    if ((u64)s == p)
      k = pgl_shape ? (long long)((q * q - q) / p) : (long long)((q * q - q) / (2 * p));
    else
      k = pgl_shape ? (long long)((q * q - 1) / (u64)s) : (long long)((q * q - 1) / (2 * (u64)s));
    rhs += k * (s - 1);
  }
  if ((rhs + 2) % 2 != 0) throw std::logic_error("genus_x1: non-integral genus");
  long long g = (rhs + 2) / 2;
  if (g < 0) throw std::logic_error("genus_x1: negative genus");
  return g;
}

u64 q_bound(int genus_max) { return 84 * ((u64)genus_max + 1) + 1; }

Rational chi_bound(u64 q, int genus_max) {
  return Rational(2 * ((long long)genus_max + 1), (long long)q - 1);
}

long long round_half_down(u64 num, u64 den) {
  // floor((2*num + den - 1) / (2*den)): nearest integer, halves down
  return (long long)((2 * num + den - 1) / (2 * den));
}

u128 pxl_group_order(u64 q, int pxl) {
  u128 n = (u128)q * (q - 1) * (q + 1);
  if (pxl == +1 && q % 2 == 1) n /= 2;
  return n;
}

}  // namespace tmc
