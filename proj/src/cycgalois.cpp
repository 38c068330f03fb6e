#include "tmc/cycgalois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tmc/cyclotomic.hpp"

namespace tmc {

namespace {

long long canon_rep(long long k, long long two_m) {
  k %= two_m;
  if (k < 0) k += two_m;
  return std::min(k, two_m - k);
}

long long inverse_mod(long long a, long long n) {
  if (n == 1) return 0;
  long long b = n, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  x0 %= n;
  if (x0 < 0) x0 += n;
  return x0;
}

bool fixes_lambda(long long k, long long n) {
  // sigma_k fixes l_n  iff  k = ±1 (mod n)
  long long r = k % n;
  return r == 1 % n || r == (n - 1) % n;
}

// sign by which sigma_k scales l_2s, defined when k = ±1 (mod s)
int eps_sign(long long k, long long s) {
  long long r = k % (2 * s);
  if (r == 1 % (2 * s) || r == (2 * s - 1) % (2 * s)) return +1;
  return -1;
}

std::vector<long long> sorted_unique(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// product set of two subgroups given by canonical reps
std::vector<long long> subgroup_product(const std::vector<long long>& A,
                                        const std::vector<long long>& B, long long two_m) {
  std::vector<long long> out;
  out.reserve(A.size() * B.size());
  for (long long x : A)
    for (long long y : B) out.push_back(canon_rep(x * y % two_m, two_m));
  return sorted_unique(std::move(out));
}

}  // namespace

FieldTowerData field_tower(const Triple& t) {
  FieldTowerData d;
  d.triple = t;
  d.m = t.lcm();
  d.two_m = 2 * d.m;

  for (long long k = 1; k <= d.m; ++k) {
    if (std::gcd(k, d.two_m) != 1) continue;
    d.reps.push_back(k);

    bool inF = true, inE = true;
    for (int s : {t.a, t.b, t.c}) {
      if (!fixes_lambda(k, 2LL * s)) inF = false;
      if (!fixes_lambda(k, s)) inE = false;
    }
    if (inE && t.a != 2) {
      int prod = 1;
      for (int s : {t.a, t.b, t.c}) prod *= eps_sign(k, s);
      if (prod != 1) inE = false;
    }
    if (inF) d.HF.push_back(k);
    if (inE) d.HE.push_back(k);
  }

  for (long long h : d.HF)
    if (!std::binary_search(d.HE.begin(), d.HE.end(), h))
      throw std::logic_error("field_tower: HF not contained in HE");

  d.degE = (int)(d.reps.size() / d.HE.size());
  d.degF = (int)(d.reps.size() / d.HF.size());
  if (d.reps.size() % d.HE.size() || d.reps.size() % d.HF.size())
    throw std::logic_error("field_tower: subgroup order does not divide group order");
  int rel = d.degF / d.degE;
  if (d.degF % d.degE || (rel != 1 && rel != 2 && rel != 4))
    throw std::logic_error("field_tower: [F:E] not in {1,2,4}");
  return d;
}

PrimeSplitting prime_splitting(const Triple& t, long long p) {
  FieldTowerData tow = field_tower(t);
  PrimeSplitting out;
  out.p = p;
  out.degE = tow.degE;
  out.degF = tow.degF;

  long long nprime = tow.two_m;
  while (nprime % p == 0) nprime /= p;

  // inertia subgroup: classes of units congruent to ±1 mod n'
  std::vector<long long> inertia;
  for (long long k : tow.reps) {
    long long r = k % nprime;
    long long r2 = (tow.two_m - k) % nprime;
    if (r == 1 % nprime || r2 == 1 % nprime) inertia.push_back(k);
  }
  inertia = sorted_unique(std::move(inertia));

  auto split_in = [&](const std::vector<long long>& H, int degK, int& e, int& f) {
    auto IH = subgroup_product(inertia, H, tow.two_m);
    e = (int)(IH.size() / H.size());
    // targets: lifts of IH reduced mod n'
    std::set<long long> targets;
    for (long long h : IH) {
      targets.insert(h % nprime);
      targets.insert((tow.two_m - h) % nprime);
    }
    long long pd = 1;
    for (f = 1;; ++f) {
      pd = pd * (p % nprime) % nprime;
      if (targets.count(pd)) break;
      if (f > degK + 1) throw std::logic_error("prime_splitting: Frobenius order overflow");
    }
    if (degK % ((long long)e * f) != 0)
      throw std::logic_error("prime_splitting: e*f does not divide the degree");
  };

  split_in(tow.HE, tow.degE, out.eE, out.fE);
  split_in(tow.HF, tow.degF, out.eF, out.fF);
  out.gE = tow.degE / (out.eE * out.fE);
  try {
    out.qE = pow_u128((u64)p, (unsigned)out.fE);
  } catch (const std::overflow_error&) {
    out.qE = 0;  // past 128 bits; only the small-field consumers need it
  }
  out.pxl = (out.eE == out.eF && out.fE == out.fF) ? +1 : -1;
  return out;
}

bool dfe_coprime(const Triple& t, long long p) {
  if (t.product2() % p != 0) return true;
  PrimeSplitting s = prime_splitting(t, p);
  return s.eE == s.eF;
}

int kronecker_split_test(const Triple& t, long long p) {
  if (t.product2() % p == 0)
    throw std::domain_error("kronecker_split_test: requires p coprime to 2abc");
  PrimeSplitting s = prime_splitting(t, p);
  if (s.qE == 0) throw std::domain_error("kronecker_split_test: residue field too large");
  long long two_m = 2 * t.lcm();
  auto Rp = get_cyc_ring((u64)p, (u64)two_m);
  const CycRing& R = *Rp;

  CycRing::Elem all = R.one();
  int factors = 0;
  for (int e : {t.a, t.b, t.c}) {
    if (e == 2) continue;  // l_2 + 2 = 0: the quadratic extension for s = 2 is trivial
    CycRing::Elem v = R.add(R.lambda_image((u64)e), R.from_int(2));
    CycRing::Elem y = R.pow(v, (u128)(s.qE - 1) / 2);
    if (!R.eq(R.mul(y, y), R.one()))
      throw std::logic_error("kronecker_split_test: l_s + 2 not a unit");
    all = R.mul(all, R.add(R.one(), y));
    ++factors;
  }
  // each component of `all` is 2^factors (all symbols +1 there) or 0; the
  // answer is prime-independent, so the components must agree
  if (R.is_zero(all)) return -1;
  CycRing::Elem expect = R.from_int(1LL << factors);
  if (!R.eq(all, expect))
    throw std::logic_error("kronecker_split_test: symbols vary across primes above p");
  return +1;
}

bool beta_admissible(const Triple& t, long long p) {
  for (int s : {t.a, t.b, t.c})
    if (s % p == 0 && s != p) return false;
  if (t.product2() % p != 0) return true;

  long long two_m = 2 * t.lcm();
  long long nprime = two_m;
  while (nprime % p == 0) nprime /= p;
  auto Rp = get_cyc_ring((u64)p, (u64)nprime);
  const CycRing& R = *Rp;

  // reduction maps zeta_2m to zeta_n'^B with B = (2m/n')^{-1} mod n'
  long long pv = two_m / nprime;
  long long B = inverse_mod(pv % nprime, nprime);

  CycRing::Elem beta = R.from_int(-4);
  CycRing::Elem prod = R.one();
  for (int s : {t.a, t.b, t.c}) {
    long long expo = (two_m / (2LL * s)) % nprime * B % nprime;
    CycRing::Elem l2s = R.add(R.zeta_pow(expo), R.zeta_pow(nprime - expo));
    beta = R.add(beta, R.mul(l2s, l2s));
    prod = R.mul(prod, l2s);
  }
  beta = R.add(beta, prod);
  return !R.is_zero(beta);
}

namespace {

int oracle_lcm_degrees(const Triple& t, long long p, bool for_F) {
  long long two_m = 2 * t.lcm();
  long long nprime = two_m;
  while (nprime % p == 0) nprime /= p;
  auto Rp = get_cyc_ring((u64)p, (u64)nprime);
  const CycRing& R = *Rp;
  long long B = inverse_mod((two_m / nprime) % nprime, nprime);

  auto lam = [&](long long n) {  // image of l_n
    long long expo = (two_m / n) % nprime * B % nprime;
    return R.add(R.zeta_pow(expo), R.zeta_pow((nprime - expo) % nprime));
  };

  std::vector<CycRing::Elem> gens;
  if (for_F) {
    for (int s : {t.a, t.b, t.c}) gens.push_back(lam(2LL * s));
  } else {
    for (int s : {t.a, t.b, t.c}) gens.push_back(lam(s));
    CycRing::Elem prod = R.one();
    for (int s : {t.a, t.b, t.c}) prod = R.mul(prod, lam(2LL * s));
    gens.push_back(prod);
  }

  long long f = 1;
  for (const auto& g : gens) f = std::lcm(f, (long long)R.frobenius_degree(g));
  return (int)f;
}

}  // namespace

int frobenius_oracle_fE(const Triple& t, long long p) { return oracle_lcm_degrees(t, p, false); }
int frobenius_oracle_fF(const Triple& t, long long p) { return oracle_lcm_degrees(t, p, true); }

namespace {

// exact arithmetic in Z[x]/Phi_n with overflow guards
struct ZCyc {
  long long n;
  std::vector<long long> phi;                  // Phi_n over Z
  std::vector<std::vector<long long>> xpow;    // x^e mod Phi for e < n
  unsigned deg;

  explicit ZCyc(long long n_) : n(n_) {
    phi = cyclotomic_poly((u64)n);
    deg = (unsigned)phi.size() - 1;
    xpow.assign((size_t)n, {});
    std::vector<long long> cur(deg, 0);
    cur[0] = 1;
    xpow[0] = cur;
    for (long long e = 1; e < n; ++e) {
      // multiply by x, reduce once if the degree reaches deg
      std::vector<long long> nxt(deg + 1, 0);
      for (unsigned i = 0; i < deg; ++i) nxt[i + 1] = cur[i];
      long long lead = nxt[deg];
      nxt.pop_back();
      if (lead != 0)
        for (unsigned i = 0; i < deg; ++i) nxt[i] -= lead * phi[i];
      for (long long v : nxt)
        if (v > (1LL << 50) || v < -(1LL << 50))
          throw std::overflow_error("ZCyc: coefficient growth");
      cur = nxt;
      xpow[e] = cur;
    }
  }

  using El = std::vector<long long>;
  El zero() const { return El(deg, 0); }
  El zeta(long long e) const {
    e %= n;
    if (e < 0) e += n;
    return xpow[e];
  }
  El add(const El& a, const El& b) const {
    El c(deg);
    for (unsigned i = 0; i < deg; ++i) c[i] = a[i] + b[i];
    return c;
  }
  El mul(const El& a, const El& b) const {
    std::vector<long long> conv(2 * deg - 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < deg; ++j) conv[i + j] += a[i] * b[j];
    }
    El out(deg, 0);
    for (unsigned i = 0; i < deg; ++i) out[i] = conv[i];
    for (size_t e = deg; e < conv.size(); ++e) {
      if (conv[e] == 0) continue;
      const El& red = xpow[e];  // e < 2*deg - 1 < n
      for (unsigned i = 0; i < deg; ++i) out[i] += conv[e] * red[i];
    }
    for (long long v : out)
      if (v > (1LL << 55) || v < -(1LL << 55))
        throw std::overflow_error("ZCyc: coefficient growth in mul");
    return out;
  }
  El lambda(long long s) const { return add(zeta(n / s), zeta(n - n / s)); }
};

}  // namespace

SymbolicTower field_tower_symbolic(const Triple& t) {
  long long m = t.lcm(), two_m = 2 * m;
  ZCyc Z(two_m);

  auto sigma_lambda = [&](long long k, long long s) {
    long long e = (two_m / s) % two_m * k % two_m;
    return Z.add(Z.zeta(e), Z.zeta(two_m - e));
  };
  auto sigma_product = [&](long long k) {
    ZCyc::El acc = Z.zeta(0);
    for (int s : {t.a, t.b, t.c}) acc = Z.mul(acc, sigma_lambda(k, 2LL * s));
    return acc;
  };

  ZCyc::El base_l[3], base_prod = sigma_product(1);
  {
    int i = 0;
    for (int s : {t.a, t.b, t.c}) base_l[i++] = sigma_lambda(1, s);
  }
  ZCyc::El base_l2[3];
  {
    int i = 0;
    for (int s : {t.a, t.b, t.c}) base_l2[i++] = sigma_lambda(1, 2LL * s);
  }

  SymbolicTower out;
  for (long long k = 1; k <= m; ++k) {
    if (std::gcd(k, two_m) != 1) continue;
    bool inF = true, inE = true;
    int i = 0;
    for (int s : {t.a, t.b, t.c}) {
      if (sigma_lambda(k, 2LL * s) != base_l2[i]) inF = false;
      if (sigma_lambda(k, s) != base_l[i]) inE = false;
      ++i;
    }
    if (inE && sigma_product(k) != base_prod) inE = false;
    if (inF) out.HF.push_back(k);
    if (inE) out.HE.push_back(k);
  }
  return out;
}

}  // namespace tmc
