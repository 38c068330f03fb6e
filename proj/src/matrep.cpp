#include "tmc/matrep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tmc {

// ---------------- field caches ----------------

namespace {

std::mutex g_field_mu;
std::map<std::pair<u64, unsigned>, std::shared_ptr<const Fq>> g_fields;

std::mutex g_small_mu;
std::map<std::pair<u64, unsigned>, std::shared_ptr<const SmallField>> g_smalls;

}  // namespace

std::shared_ptr<const Fq> get_field(u64 p, unsigned r) {
  std::lock_guard<std::mutex> lk(g_field_mu);
  auto key = std::make_pair(p, r);
  auto it = g_fields.find(key);
  if (it != g_fields.end()) return it->second;
  auto f = std::make_shared<Fq>(p, r);
  f->generator();  // force lazy members before the instance is shared
  g_fields[key] = f;
  return f;
}

std::shared_ptr<const SmallField> small_field(u64 p, unsigned r) {
  std::lock_guard<std::mutex> lk(g_small_mu);
  auto key = std::make_pair(p, r);
  auto it = g_smalls.find(key);
  if (it != g_smalls.end()) return it->second;

  auto sf = std::make_shared<SmallField>();
  sf->field = get_field(p, r);
  sf->p = p;
  sf->r = r;
  u128 q = sf->field->card();
  if (q > 1024) throw std::domain_error("small_field: residue field too large for tables");
  sf->q = (int)q;
  const Fq& F = *sf->field;
  int Q = sf->q;

  std::vector<FqElem> elems;
  elems.reserve(Q);
  for (int i = 0; i < Q; ++i) elems.push_back(F.from_code(i));

  sf->mul.assign((size_t)Q * Q, 0);
  sf->add.assign((size_t)Q * Q, 0);
  for (int i = 0; i < Q; ++i)
    for (int j = 0; j <= i; ++j) {
      int m = (int)F.mul(elems[i], elems[j]).code();
      int s = (int)F.add(elems[i], elems[j]).code();
      sf->mul[(size_t)i * Q + j] = sf->mul[(size_t)j * Q + i] = m;
      sf->add[(size_t)i * Q + j] = sf->add[(size_t)j * Q + i] = s;
    }
  sf->neg.assign(Q, 0);
  sf->invt.assign(Q, -1);
  sf->sqrt_.assign(Q, -1);
  sf->issq.assign(Q, 0);
  for (int i = 0; i < Q; ++i) {
    sf->neg[i] = (int)F.neg(elems[i]).code();
    if (i != 0) sf->invt[i] = (int)F.inv(elems[i]).code();
    int sq = sf->m(i, i);
    sf->sqrt_[sq] = i;  // overwritten by later i; any root serves
    sf->issq[sq] = 1;
  }
  sf->issq[0] = 1;
  sf->nonsquare = -1;
  for (int i = 1; i < Q; ++i)
    if (!sf->issq[i]) {
      sf->nonsquare = i;
      break;
    }

  g_smalls[key] = sf;
  return sf;
}

// ---------------- KMat ----------------

KMat km_mul(const SmallField& F, const KMat& x, const KMat& y) {
  KMat z;
  z.e[0] = F.s(F.m(x.e[0], y.e[0]), F.m(x.e[1], y.e[2]));
  z.e[1] = F.s(F.m(x.e[0], y.e[1]), F.m(x.e[1], y.e[3]));
  z.e[2] = F.s(F.m(x.e[2], y.e[0]), F.m(x.e[3], y.e[2]));
  z.e[3] = F.s(F.m(x.e[2], y.e[1]), F.m(x.e[3], y.e[3]));
  return z;
}

int km_det(const SmallField& F, const KMat& x) {
  return F.s(F.m(x.e[0], x.e[3]), F.neg[F.m(x.e[1], x.e[2])]);
}

bool km_is_scalar(const SmallField& F, const KMat& x) {
  (void)F;
  return x.e[1] == 0 && x.e[2] == 0 && x.e[0] == x.e[3];
}

KMat km_normalize(const SmallField& F, const KMat& x) {
  int lead = 0;
  for (int i = 0; i < 4; ++i)
    if (x.e[i] != 0) {
      lead = x.e[i];
      break;
    }
  if (lead == 0) throw std::domain_error("km_normalize: zero matrix");
  int li = F.invt[lead];
  KMat z;
  for (int i = 0; i < 4; ++i) z.e[i] = F.m(li, x.e[i]);
  return z;
}

int projective_order(const SmallField& F, const KMat& x, int cap) {
  if (km_det(F, x) == 0) throw std::domain_error("projective_order: singular matrix");
  KMat y = x;
  for (int n = 1; n <= cap; ++n) {
    if (km_is_scalar(F, y)) return n;
    y = km_mul(F, y, x);
  }
  throw std::domain_error("projective_order: exceeded cap");
}

// ---------------- coset actions ----------------

namespace {

// P^1 points: idx < q is (x : 1) with x = code idx; idx == q is (1 : 0).
int p1_apply(const SmallField& F, const KMat& M, int pt) {
  int x, z;
  if (pt < F.q) {
    x = pt;
    z = 1;
  } else {
    x = 1;
    z = 0;
  }
  int nx = F.s(F.m(M.e[0], x), F.m(M.e[1], z));
  int nz = F.s(F.m(M.e[2], x), F.m(M.e[3], z));
  if (nz == 0) return F.q;
  return F.m(nx, F.invt[nz]);
}

std::vector<int> orbit_lengths(int npts, const std::function<int(int)>& next) {
  std::vector<char> seen(npts, 0);
  std::vector<int> out;
  for (int s = 0; s < npts; ++s) {
    if (seen[s]) continue;
    int len = 0, cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++len;
      cur = next(cur);
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// divide a matrix by a square root of its determinant
KMat km_unit_det(const SmallField& F, const KMat& M) {
  int d = km_det(F, M);
  if (d == 0) throw std::domain_error("singular matrix");
  int s = F.sqrt_[d];
  if (s < 0) throw std::domain_error("determinant is not a square");
  int si = F.invt[s];
  KMat z;
  for (int i = 0; i < 4; ++i) z.e[i] = F.m(si, M.e[i]);
  return z;
}

}  // namespace

std::vector<int> p1_cycle_type(const SmallField& F, const KMat& x) {
  return orbit_lengths(F.q + 1, [&](int pt) { return p1_apply(F, x, pt); });
}

std::vector<int> h1_cycle_type(const SmallField& F, const KMat& x, int pxl) {
  const int q = F.q;
  const bool even = (F.p == 2);
  const bool psl = (pxl == +1) && !even;

  // enumerate canonical pairs (x, z) != (0, 0); in odd characteristic a pair
  // is identified with its negative
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_idx((size_t)q * q, -1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      if (!even) {
        int na = F.neg[a], nb = F.neg[b];
        if (std::make_pair(na, nb) < std::make_pair(a, b)) continue;  // not canonical
      }
      pair_idx[(size_t)a * q + b] = (int)pairs.size();
      pairs.push_back({a, b});
    }
  auto canon = [&](int a, int b) {
    if (!even) {
      int na = F.neg[a], nb = F.neg[b];
      if (std::make_pair(na, nb) < std::make_pair(a, b)) return pair_idx[(size_t)na * q + nb];
    }
    return pair_idx[(size_t)a * q + b];
  };

  if (psl || even) {
    KMat M = km_unit_det(F, x);  // PSL classes (and even q) admit det-1 lifts
    auto next = [&](int i) {
      auto [a, b] = pairs[i];
      int na = F.s(F.m(M.e[0], a), F.m(M.e[1], b));
      int nb = F.s(F.m(M.e[2], a), F.m(M.e[3], b));
      return canon(na, nb);
    };
    return orbit_lengths((int)pairs.size(), next);
  }

  // PGL, q odd: cosets are (pair mod +-1, determinant square class); the
  // acting matrix multiplies the class by its own determinant's class and the
  // pair is rescaled to bring the representative back to det in {1, mu}.
  const int mu = F.nonsquare;
  if (mu < 0) throw std::logic_error("h1_cycle_type: no non-square available");
  int d = km_det(F, x);
  int dclass = F.issq[d] ? 0 : 1;
  auto next = [&](int i) {
    int u = i & 1;
    auto [a, b] = pairs[i >> 1];
    int na = F.s(F.m(x.e[0], a), F.m(x.e[1], b));
    int nb = F.s(F.m(x.e[2], a), F.m(x.e[3], b));
    int tu = u ^ dclass;
    int uval = u ? mu : 1;
    int tval = tu ? mu : 1;
    int e = F.m(F.m(d, uval), F.invt[tval]);  // = c^2, a square by construction
    int c = F.sqrt_[e];
    if (c < 0) throw std::logic_error("h1_cycle_type: rescale factor not a square");
    int ci = F.invt[c];
    return canon(F.m(ci, na), F.m(ci, nb)) * 2 + tu;
  };
  return orbit_lengths(2 * (int)pairs.size(), next);
}

// ---------------- big-field matrices and the span ----------------

namespace {

struct LMat {
  FqElem a, b, c, d;
};

LMat lm_mul(const Fq& L, const LMat& x, const LMat& y) {
  return LMat{L.add(L.mul(x.a, y.a), L.mul(x.b, y.c)), L.add(L.mul(x.a, y.b), L.mul(x.b, y.d)),
              L.add(L.mul(x.c, y.a), L.mul(x.d, y.c)), L.add(L.mul(x.c, y.b), L.mul(x.d, y.d))};
}

FqElem lm_det(const Fq& L, const LMat& x) {
  return L.sub(L.mul(x.a, x.d), L.mul(x.b, x.c));
}

FqElem lm_trace(const Fq& L, const LMat& x) { return L.add(x.a, x.d); }

// inverse of a determinant-1 matrix
LMat lm_inv1(const Fq& L, const LMat& x) { return LMat{x.d, L.neg(x.b), L.neg(x.c), x.a}; }

bool lm_is_scalar(const LMat& x) {
  return x.b.is_zero() && x.c.is_zero() && x.a == x.d;
}

LMat lm_scale(const Fq& L, const FqElem& s, const LMat& x) {
  return LMat{L.mul(s, x.a), L.mul(s, x.b), L.mul(s, x.c), L.mul(s, x.d)};
}

LMat lm_add(const Fq& L, const LMat& x, const LMat& y) {
  return LMat{L.add(x.a, y.a), L.add(x.b, y.b), L.add(x.c, y.c), L.add(x.d, y.d)};
}

LMat lm_sub(const Fq& L, const LMat& x, const LMat& y) {
  return LMat{L.sub(x.a, y.a), L.sub(x.b, y.b), L.sub(x.c, y.c), L.sub(x.d, y.d)};
}

bool lm_is_zero(const LMat& x) {
  return x.a.is_zero() && x.b.is_zero() && x.c.is_zero() && x.d.is_zero();
}

LMat lm_one(const Fq& L) { return LMat{L.one(), L.zero(), L.zero(), L.one()}; }

int lm_projective_order(const Fq& L, const LMat& x, int cap) {
  LMat y = x;
  for (int n = 1; n <= cap; ++n) {
    if (lm_is_scalar(y)) return n;
    y = lm_mul(L, y, x);
  }
  return 0;  // order exceeds cap
}

std::vector<std::uint32_t> lm_vec(const Fq& L, const LMat& x) {
  std::vector<std::uint32_t> v;
  v.reserve(4 * L.r());
  for (const FqElem* e : {&x.a, &x.b, &x.c, &x.d})
    v.insert(v.end(), e->coeffs().begin(), e->coeffs().end());
  return v;
}

// row echelon accumulator over F_p
struct Echelon {
  u64 p;
  size_t width;
  std::vector<std::vector<std::uint32_t>> rows;  // each with leading 1, sorted by pivot
  std::vector<size_t> pivots;

  Echelon(u64 p_, size_t w) : p(p_), width(w) {}

  size_t rank() const { return rows.size(); }

  bool insert(std::vector<std::uint32_t> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      std::uint32_t c = v[pivots[i]];
      if (c == 0) continue;
      u64 f = p - c;
      const auto& r = rows[i];
      for (size_t j = pivots[i]; j < width; ++j) v[j] = (std::uint32_t)((v[j] + f * r[j]) % p);
    }
    size_t piv = width;
    for (size_t j = 0; j < width; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == width) return false;
    // normalize pivot to 1
    u64 inv = 1, base = v[piv], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t j = piv; j < width; ++j) v[j] = (std::uint32_t)(v[j] * inv % p);
    // back-substitute into existing rows for a clean reduced form
    for (size_t i = 0; i < rows.size(); ++i) {
      std::uint32_t c = rows[i][piv];
      if (c == 0) continue;
      u64 f = p - c;
      for (size_t j = piv; j < width; ++j)
        rows[i][j] = (std::uint32_t)((rows[i][j] + f * v[j]) % p);
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, piv);
    return true;
  }
};

// Solve sum_k x_k col_k = b over F_p; throws if inconsistent.
std::vector<std::uint32_t> solve_fp(const std::vector<std::vector<std::uint32_t>>& cols,
                                    const std::vector<std::uint32_t>& b, u64 p) {
  const size_t n = cols.size();
  const size_t m = b.size();
  // augmented matrix, rows = equations
  std::vector<std::vector<u64>> A(m, std::vector<u64>(n + 1, 0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) A[i][j] = cols[j][i];
  for (size_t i = 0; i < m; ++i) A[i][n] = b[i];

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = row;
    while (sel < m && A[sel][col] % p == 0) ++sel;
    if (sel == m) continue;
    std::swap(A[sel], A[row]);
    u64 inv = 1, base = A[row][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t j = col; j <= n; ++j) A[row][j] = A[row][j] % p * inv % p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      u64 c = A[i][col] % p;
      if (c == 0) continue;
      u64 f = p - c;
      for (size_t j = col; j <= n; ++j) A[i][j] = (A[i][j] + f * A[row][j]) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  // consistency
  for (size_t i = row; i < m; ++i)
    if (A[i][n] % p != 0) throw std::logic_error("solve_fp: inconsistent system");
  std::vector<std::uint32_t> x(n, 0);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = (std::uint32_t)(A[i][n] % p);
  return x;
}

}  // namespace

// ---------------- representation builder ----------------

TripleRep build_representation(const Triple& t, long long p) {
  TripleRep rep;
  rep.t = t;
  rep.p = p;
  rep.split = prime_splitting(t, p);

  if (rep.split.qE == 0 || rep.split.qE > 1024) {
    rep.note = "residue field too large for explicit matrices";
    return rep;
  }
  const int qE = (int)rep.split.qE;
  const unsigned fE = (unsigned)rep.split.fE;
  const unsigned R = 2 * (unsigned)rep.split.fF;
  auto Lp = get_field((u64)p, R);
  const Fq& L = *Lp;

  long long two_m = 2 * t.lcm();
  long long mprime = two_m;
  while (mprime % p == 0) mprime /= p;

  // prime-to-p parts of 2a, 2b, 2c
  long long ords[3];
  {
    int idx = 0;
    for (int s : {t.a, t.b, t.c}) {
      long long o = 2LL * s;
      while (o % p == 0) o /= p;
      ords[idx++] = o;
    }
  }
  for (long long o : ords)
    if (mprime % o != 0) throw std::logic_error("build_representation: order bookkeeping");

  FqElem master0 = L.root_of_unity((u128)mprime);

  // pick a prime above p where the discriminant generator beta is nonzero:
  // Galois-twist the master root until the trace triple is irreducible
  FqElem lc = L.zero();
  FqElem za = L.zero(), zb = L.zero();
  bool found = false;
  for (long long j = 1; j <= mprime && !found; ++j) {
    if (std::gcd(j, mprime) != 1) continue;  // for mprime = 1 only j = 1 runs
    FqElem master = L.pow(master0, (u128)j);
    FqElem z[3], l[3];
    for (int i = 0; i < 3; ++i) {
      z[i] = L.pow(master, (u128)(mprime / ords[i]));
      l[i] = L.add(z[i], L.inv(z[i]));
    }
    FqElem beta = L.sub(L.add(L.add(L.mul(l[0], l[0]), L.mul(l[1], l[1])),
                              L.add(L.mul(l[2], l[2]), L.mul(L.mul(l[0], l[1]), l[2]))),
                        L.from_int(4));
    if (!beta.is_zero()) {
      za = z[0];
      zb = z[1];
      lc = l[2];
      found = true;
    }
  }
  if (!found) {
    rep.note = "beta vanishes at every prime above p";
    return rep;
  }

  // determinant-1 seed matrices; lifts multiply to -1, so tr(Ma Mb) = -l_c
  LMat Ma{za, L.one(), L.zero(), L.inv(za)};
  FqElem w = L.mul(za, zb);
  FqElem tcorner = L.sub(L.sub(L.neg(lc), w), L.inv(w));
  LMat Mb{zb, L.zero(), tcorner, L.inv(zb)};
  LMat Mab = lm_mul(L, Ma, Mb);
  LMat Mc = lm_inv1(L, Mab);

  const int cap = 2 * t.c + (int)p + 16;
  rep.ord_a = lm_projective_order(L, Ma, cap);
  rep.ord_b = lm_projective_order(L, Mb, cap);
  rep.ord_c = lm_projective_order(L, Mc, cap);
  rep.orders_ok = (rep.ord_a == t.a && rep.ord_b == t.b && rep.ord_c == t.c);
  if (!rep.orders_ok && rep.note.empty()) {
    rep.note = "generator orders (" + std::to_string(rep.ord_a) + "," +
               std::to_string(rep.ord_b) + "," + std::to_string(rep.ord_c) +
               ") differ from " + t.str();
  }

  // ---- span of the even part's reduced order over F_qE ----
  LMat I = lm_one(L);
  LMat gens3[3] = {Ma, Mb, Mc};
  std::vector<LMat> words;
  words.push_back(I);
  for (const LMat& s : gens3)
    for (const LMat& u : gens3) {
      LMat si = lm_inv1(L, s);
      LMat ui = lm_inv1(L, u);
      words.push_back(lm_mul(L, lm_mul(L, si, lm_mul(L, u, u)), s));        // s^-1 u^2 s
      words.push_back(lm_mul(L, lm_mul(L, s, u), lm_mul(L, si, ui)));       // s u s^-1 u^-1
    }

  FqElem kappa = (qE > 2) ? L.root_of_unity((u128)(qE - 1)) : L.one();
  std::vector<FqElem> kpow{L.one()};
  for (unsigned e = 1; e < fE; ++e) kpow.push_back(L.mul(kpow.back(), kappa));

  Echelon ech((u64)p, 4 * L.r());
  std::vector<LMat> basis;
  auto try_insert = [&](const LMat& mmat) {
    size_t before = ech.rank();
    for (unsigned e = 0; e < fE; ++e) ech.insert(lm_vec(L, lm_scale(L, kpow[e], mmat)));
    size_t delta = ech.rank() - before;
    if (delta == 0) return false;
    if (delta != fE) throw std::logic_error("span growth not a multiple of f_E");
    basis.push_back(mmat);
    if (basis.size() > 4) throw std::logic_error("order span exceeds dimension 4");
    return true;
  };
  for (const LMat& mmat : words) try_insert(mmat);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < basis.size() && !changed; ++i)
      for (size_t j = 0; j < basis.size() && !changed; ++j)
        changed = try_insert(lm_mul(L, basis[i], basis[j]));
  }

  if (basis.size() == 4) {
    // Gram determinant of the reduced trace pairing on the basis
    FqElem G[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) G[i][j] = lm_trace(L, lm_mul(L, basis[i], basis[j]));
    // 4x4 determinant by cofactor expansion
    FqElem det = L.zero();
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
      int sgn = 1;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (perm[i] > perm[j]) sgn = -sgn;
      FqElem term = L.one();
      for (int i = 0; i < 4; ++i) term = L.mul(term, G[i][perm[i]]);
      det = (sgn > 0) ? L.add(det, term) : L.sub(det, term);
    } while (std::next_permutation(perm, perm + 4));
    rep.locally_maximal = !det.is_zero();
  } else {
    rep.locally_maximal = false;
  }
  if (!rep.locally_maximal && rep.note.empty())
    rep.note = "reduced order is not locally maximal at p (discrd)";

  if (!rep.locally_maximal || !rep.orders_ok) return rep;

  // ---- split the span as M_2(F_qE) and rewrite the generators over it ----

  // subfield F_qE of L, enumerated as kappa powers
  std::vector<FqElem> subfield{L.zero(), L.one()};
  {
    FqElem cur = L.one();
    for (int i = 1; i < qE - 1; ++i) {
      cur = L.mul(cur, kappa);
      subfield.push_back(cur);
    }
  }

  // find a rank-one element: u in the span with an eigenvalue in F_qE
  LMat zdiv = lm_one(L);
  bool have_z = false;
  std::vector<LMat> cands;
  for (const LMat& bmat : basis) cands.push_back(bmat);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (i != j)
        for (const FqElem& cc : subfield) {
          if (cc.is_zero()) continue;
          cands.push_back(lm_add(L, basis[i], lm_scale(L, cc, basis[j])));
        }
  for (const LMat& u : cands) {
    FqElem tr = lm_trace(L, u);
    FqElem dt = lm_det(L, u);
    for (const FqElem& alpha : subfield) {
      FqElem val = L.add(L.sub(L.mul(alpha, alpha), L.mul(tr, alpha)), dt);
      if (!val.is_zero()) continue;
      LMat z = lm_sub(L, u, lm_scale(L, alpha, I));
      if (lm_is_zero(z)) continue;
      if (!lm_det(L, z).is_zero()) throw std::logic_error("zero divisor has nonzero det");
      zdiv = z;
      have_z = true;
      break;
    }
    if (have_z) break;
  }
  if (!have_z) throw std::logic_error("no zero divisor found in a split matrix algebra");

  // left ideal J = span * zdiv, an F_qE-plane: extract a basis (v1, v2)
  Echelon jech((u64)p, 4 * L.r());
  std::vector<LMat> jbasis;
  for (const LMat& bmat : basis) {
    LMat w2 = lm_mul(L, bmat, zdiv);
    size_t before = jech.rank();
    for (unsigned e = 0; e < fE; ++e) jech.insert(lm_vec(L, lm_scale(L, kpow[e], w2)));
    if (jech.rank() == before + fE) jbasis.push_back(w2);
  }
  if (jbasis.size() != 2) throw std::logic_error("left ideal is not two-dimensional");

  // coordinate solver: x*v_j = sum_e a_e kappa^e v_1 + sum_e b_e kappa^e v_2
  std::vector<std::vector<std::uint32_t>> cols;
  for (const LMat& v : jbasis)
    for (unsigned e = 0; e < fE; ++e) cols.push_back(lm_vec(L, lm_scale(L, kpow[e], v)));

  // transport F_qE from L to the standalone small field: kappa |-> a root of
  // its minimal polynomial
  auto K = small_field((u64)p, fE);
  const Fq& KF = *K->field;
  int rho;
  {
    // minimal polynomial of kappa over F_p by linear algebra on kappa powers
    std::vector<std::vector<std::uint32_t>> pows;
    FqElem cur = L.one();
    for (unsigned e = 0; e <= fE; ++e) {
      pows.push_back(cur.coeffs());
      cur = L.mul(cur, kappa);
    }
    std::vector<std::vector<std::uint32_t>> lower(pows.begin(), pows.end() - 1);
    std::vector<std::uint32_t> coef = solve_fp(lower, pows[fE], (u64)p);
    // kappa^fE = sum coef[e] kappa^e; minpoly = x^fE - sum coef[e] x^e
    rho = -1;
    for (int cand = 0; cand < qE; ++cand) {
      FqElem xx = KF.from_code(cand);
      FqElem acc = KF.pow(xx, fE);
      FqElem rhs = KF.zero();
      FqElem xp = KF.one();
      for (unsigned e = 0; e < fE; ++e) {
        rhs = KF.add(rhs, KF.mul(KF.from_int(coef[e]), xp));
        xp = KF.mul(xp, xx);
      }
      if (acc == rhs) {
        rho = cand;
        break;
      }
    }
    if (rho < 0) throw std::logic_error("minimal polynomial of kappa has no root");
  }
  FqElem rhoK = KF.from_code(rho);

  auto phi = [&](const LMat& x) {
    KMat out;
    for (int jcol = 0; jcol < 2; ++jcol) {
      std::vector<std::uint32_t> target = lm_vec(L, lm_mul(L, x, jbasis[jcol]));
      std::vector<std::uint32_t> sol = solve_fp(cols, target, (u64)p);
      for (int irow = 0; irow < 2; ++irow) {
        FqElem acc = KF.zero();
        FqElem rp = KF.one();
        for (unsigned e = 0; e < fE; ++e) {
          acc = KF.add(acc, KF.mul(KF.from_int(sol[irow * fE + e]), rp));
          rp = KF.mul(rp, rhoK);
        }
        out.e[irow * 2 + jcol] = (int)acc.code();
      }
    }
    return out;
  };

  // generator images inside the span: l_2s * M_s = M_s^2 + 1.  For a = 2 the
  // trace l_4 vanishes, so use (M_b^2+1)(M_c^2+1) = l_2b l_2c M_b M_c, which
  // is M_a^{-1} and hence projectively M_a (an order-2 class is its inverse).
  LMat Sa = (t.a == 2)
                ? lm_mul(L, lm_add(L, lm_mul(L, Mb, Mb), I), lm_add(L, lm_mul(L, Mc, Mc), I))
                : lm_add(L, lm_mul(L, Ma, Ma), I);
  LMat Sb = lm_add(L, lm_mul(L, Mb, Mb), I);
  LMat Sc = lm_add(L, lm_mul(L, Mc, Mc), I);
  if (lm_is_zero(Sa) || lm_is_zero(Sb) || lm_is_zero(Sc))
    throw std::logic_error("scaled generator vanished");

  KMat Pa = phi(Sa), Pb = phi(Sb), Pc = phi(Sc);

  // phi must be multiplicative
  if (!(km_mul(*K, Pa, Pb) == phi(lm_mul(L, Sa, Sb))))
    throw std::logic_error("splitting map is not a homomorphism");

  rep.K = K;
  rep.Pa = km_normalize(*K, Pa);
  rep.Pb = km_normalize(*K, Pb);
  rep.Pc = km_normalize(*K, Pc);
  rep.have_matrices = true;

  // sanity: orders and the projective product relation survive the transport
  if (projective_order(*K, rep.Pa, cap) != t.a || projective_order(*K, rep.Pb, cap) != t.b ||
      projective_order(*K, rep.Pc, cap) != t.c)
    throw std::logic_error("transported generator orders changed");
  if (!km_is_scalar(*K, km_mul(*K, km_mul(*K, Pa, Pb), Pc)))
    throw std::logic_error("transported product is not scalar");

  // determinant square classes must match the split/non-split group type
  bool all_square = true;
  for (const KMat* P : {&rep.Pa, &rep.Pb, &rep.Pc})
    if (!K->issq[km_det(*K, *P)]) all_square = false;
  if ((rep.split.pxl == +1) != all_square)
    throw std::logic_error("determinant classes disagree with the splitting type");

  return rep;
}

bool sigma2_is_split(const TripleRep& rep) {
  if (rep.t.a != 2) throw std::domain_error("sigma2_is_split: requires a = 2");
  if (!rep.have_matrices) throw std::domain_error("sigma2_is_split: matrices unavailable");
  if (rep.K->p == 2) throw std::domain_error("sigma2_is_split: requires odd q");
  int fixed = 0;
  for (int pt = 0; pt <= rep.K->q; ++pt)
    if (p1_apply(*rep.K, rep.Pa, pt) == pt) ++fixed;
  if (fixed != 0 && fixed != 2)
    throw std::logic_error("sigma2_is_split: unexpected fixed point count");
  return fixed == 2;
}

bool order_locally_maximal(const Triple& t, long long p) {
  return build_representation(t, p).locally_maximal;
}

}  // namespace tmc
