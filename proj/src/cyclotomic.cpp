#include "tmc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tmc {

namespace {

// exact division of integer polynomials, quotient known to be integral
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    long long c = num[k + den.size() - 1];
    if (c % den.back() != 0) throw std::logic_error("cyclotomic division not exact");
    c /= den.back();
    q[k] = c;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (auto v : num)
    if (v != 0) throw std::logic_error("cyclotomic division has remainder");
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_poly(u64 n) {
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built up over divisors of n
  std::map<u64, std::vector<long long>> memo;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (const auto& [e, phi] : memo)
      if (d % e == 0) num = poly_divide_exact(std::move(num), phi);
    memo[d] = std::move(num);
  }
  return memo[n];
}

CycRing::CycRing(u64 p, u64 n) : p_(p), n_(n) {
  if (n == 0 || std::gcd(p, n) != 1)
    throw std::invalid_argument("CycRing: need gcd(p, n) = 1, n >= 1");
  auto phiz = cyclotomic_poly(n);
  phi_.resize(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) {
    long long v = phiz[i] % (long long)p;
    if (v < 0) v += (long long)p;
    phi_[i] = (std::uint32_t)v;
  }
  frob_.reserve(degree());
  for (unsigned j = 0; j < degree(); ++j) frob_.push_back(zeta_pow((long long)j * (long long)p_));
}

CycRing::Elem CycRing::frobenius(const Elem& a) const {
  Elem out = zero();
  for (unsigned j = 0; j < degree(); ++j) {
    if (a[j] == 0) continue;
    u64 c = a[j];
    const Elem& fj = frob_[j];
    for (unsigned i = 0; i < degree(); ++i) out[i] = (std::uint32_t)((out[i] + c * fj[i]) % p_);
  }
  return out;
}

CycRing::Elem CycRing::zero() const { return Elem(degree(), 0); }

CycRing::Elem CycRing::one() const {
  Elem e = zero();
  if (degree() == 0) return e;  // n = 1 or 2 gives degree 1; never 0 in practice
  e[0] = 1 % p_;
  return e;
}

CycRing::Elem CycRing::from_int(long long v) const {
  Elem e = zero();
  long long m = v % (long long)p_;
  if (m < 0) m += (long long)p_;
  e[0] = (std::uint32_t)m;
  return e;
}

CycRing::Elem CycRing::add(const Elem& a, const Elem& b) const {
  Elem c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = (a[i] + (u64)b[i]) % p_;
  return c;
}

CycRing::Elem CycRing::sub(const Elem& a, const Elem& b) const {
  Elem c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = (a[i] + p_ - b[i]) % p_;
  return c;
}

CycRing::Elem CycRing::mul(const Elem& a, const Elem& b) const {
  const unsigned d = degree();
  std::vector<u64> c(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) c[i + j] = (c[i + j] + (u64)a[i] * b[j]) % p_;
  }
  // reduce mod monic phi_
  for (size_t k = c.size(); k-- > d;) {
    u64 lead = c[k];
    if (lead == 0) continue;
    c[k] = 0;
    for (unsigned i = 0; i < d; ++i)
      c[k - d + i] = (c[k - d + i] + lead * (p_ - phi_[i] % p_)) % p_;
  }
  Elem out(d);
  for (unsigned i = 0; i < d; ++i) out[i] = (std::uint32_t)c[i];
  return out;
}

CycRing::Elem CycRing::pow(const Elem& a, u128 e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool CycRing::is_zero(const Elem& a) const {
  for (auto v : a)
    if (v) return false;
  return true;
}

bool CycRing::eq(const Elem& a, const Elem& b) const { return a == b; }

CycRing::Elem CycRing::zeta_pow(long long k) const {
  long long kk = k % (long long)n_;
  if (kk < 0) kk += (long long)n_;
  // x^kk reduced mod Phi_n: multiply up in chunks below the degree
  Elem e = one();
  Elem x = zero();
  if (degree() >= 2)
    x[1] = 1;
  else {
    // degree 1: Phi_1 = x - 1 or Phi_2 = x + 1; x reduces to a constant
    x[0] = (n_ == 1) ? 1 % p_ : (std::uint32_t)((p_ - 1) % p_);
    Elem r = one();
    for (long long i = 0; i < kk; ++i) r = mul(r, x);
    return r;
  }
  Elem base = x;
  long long ee = kk;
  while (ee > 0) {
    if (ee & 1) e = mul(e, base);
    base = mul(base, base);
    ee >>= 1;
  }
  return e;
}

CycRing::Elem CycRing::lambda_image(u64 s) const {
  if (s == 0 || n_ % s != 0) throw std::invalid_argument("lambda_image: s must divide n");
  long long k = (long long)(n_ / s);
  return add(zeta_pow(k), zeta_pow((long long)n_ - k));
}

unsigned CycRing::frobenius_degree(const Elem& a) const {
  Elem y = a;
  unsigned cap = degree() + 1;
  for (unsigned d = 1; d <= cap; ++d) {
    y = frobenius(y);
    if (y == a) return d;
  }
  throw std::logic_error("CycRing::frobenius_degree did not stabilize");
}

std::shared_ptr<const CycRing> get_cyc_ring(u64 p, u64 n) {
  static std::mutex mu;
  static std::map<std::pair<u64, u64>, std::shared_ptr<const CycRing>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<const CycRing>(p, n);
  cache[key] = ring;
  return ring;
}

}  // namespace tmc
