#include "tmc/ffarith.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace tmc {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u128 pow_u128(u64 base, unsigned e) {
  u128 x = 1;
  for (unsigned i = 0; i < e; ++i) {
    u128 y = x * base;
    if (base != 0 && y / base != x) throw std::overflow_error("pow_u128 overflow");
    x = y;
  }
  return x;
}

std::vector<std::pair<u64, int>> factor_u128(u128 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; (u128)d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
    if (d > (u64(1) << 32))
      throw std::overflow_error("factor_u128: cofactor too large for trial division");
  }
  if (n > 1) {
    if (n > u128(std::numeric_limits<u64>::max()))
      throw std::overflow_error("factor_u128: prime cofactor exceeds 64 bits");
    out.push_back({(u64)n, 1});
  }
  return out;
}

// ---- polynomial helpers over F_p (dense, constant term first) ----

namespace {

using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
void poly_mod(Poly& a, const Poly& f, u64 p) {
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    u64 lead = a.back();
    size_t shift = a.size() - 1 - df;
    if (lead != 0) {
      for (size_t i = 0; i < df; ++i) {
        u64 v = a[shift + i] + (p - f[i] % p) % p * lead % p;
        a[shift + i] = v % p;
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() <= df) break;
  }
  poly_trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    u64 ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + ai * b[j]) % p;
  }
  poly_mod(c, f, p);
  return c;
}

Poly poly_powmod(Poly base, u128 e, const Poly& f, u64 p) {
  Poly result{1};
  poly_mod(base, f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic, then reduce a mod b
    u64 lead = b.back();
    if (lead != 1) {
      // invert lead mod p
      u64 inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& x : b) x = (u64)x * inv % p;
    }
    Poly r = a;
    poly_mod(r, b, p);
    a = b;
    b = r;
  }
  return a;
}

Poly poly_x() { return Poly{0, 1}; }

bool poly_is_x(const Poly& a) { return a.size() == 2 && a[0] == 0 && a[1] == 1; }

// Irreducibility over F_p: x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) = 1
// for every prime l | r.
bool is_irreducible(const Poly& f, u64 p, unsigned r) {
  if (r == 1) return true;
  Poly xp = poly_x();
  std::vector<Poly> frob_powers(r + 1);  // frob_powers[k] = x^(p^k) mod f
  frob_powers[0] = poly_x();
  for (unsigned k = 1; k <= r; ++k)
    frob_powers[k] = poly_powmod(frob_powers[k - 1], p, f, p);
  if (!poly_is_x(frob_powers[r])) return false;
  for (unsigned l = 2; l <= r; ++l) {
    if (r % l != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    Poly g = frob_powers[r / l];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    poly_trim(g);
    Poly gc = poly_gcd(g, f, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

}  // namespace

// ---- Fq ----

Fq::Fq(u64 p, unsigned r) : p_(p), r_(r) {
  if (!is_prime_u64(p)) throw field_error("Fq: p is not prime");
  if (r < 1) throw field_error("Fq: extension degree must be >= 1");
  if (p >= (u64(1) << 20)) throw field_error("Fq: characteristic too large");
  q_ = pow_u128(p, r);
  if (q_ >> 126) throw field_error("Fq: field too large");

  // Deterministic modulus: enumerate monic degree-r polynomials by the
  // base-p code of their lower coefficients and take the first irreducible.
  for (u128 code = 0;; ++code) {
    if (code >= q_) throw field_error("Fq: no irreducible modulus found");
    Poly f(r + 1, 0);
    u128 c = code;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = (std::uint32_t)(c % p);
      c /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p, r)) {
      mod_ = f;
      break;
    }
  }
}

bool Fq::same_field(const Fq& o) const {
  return this == &o || (p_ == o.p_ && r_ == o.r_ && mod_ == o.mod_);
}

void Fq::check(const FqElem& a) const {
  if (a.field_ == nullptr || !same_field(*a.field_))
    throw field_error("field mismatch");
}

FqElem Fq::zero() const { return FqElem(this, std::vector<std::uint32_t>(r_, 0)); }

FqElem Fq::one() const { return from_int(1); }

FqElem Fq::from_int(u64 v) const {
  std::vector<std::uint32_t> c(r_, 0);
  c[0] = (std::uint32_t)(v % p_);
  return FqElem(this, std::move(c));
}

FqElem Fq::from_code(u64 code) const {
  std::vector<std::uint32_t> c(r_, 0);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = (std::uint32_t)(code % p_);
    code /= p_;
  }
  return FqElem(this, std::move(c));
}

FqElem Fq::gen_x() const {
  std::vector<std::uint32_t> c(r_, 0);
  if (r_ >= 2)
    c[1] = 1;
  return FqElem(this, std::move(c));
}

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
  check(a);
  check(b);
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = (a.c_[i] + (u64)b.c_[i]) % p_;
  return FqElem(this, std::move(c));
}

FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
  check(a);
  check(b);
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = (a.c_[i] + p_ - b.c_[i]) % p_;
  return FqElem(this, std::move(c));
}

FqElem Fq::neg(const FqElem& a) const {
  check(a);
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = a.c_[i] == 0 ? 0 : (std::uint32_t)(p_ - a.c_[i]);
  return FqElem(this, std::move(c));
}

std::vector<std::uint32_t> Fq::poly_mul(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const {
  Poly c(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    u64 ai = a[i];
    for (unsigned j = 0; j < r_; ++j) c[i + j] = (c[i + j] + ai * b[j]) % p_;
  }
  poly_mod(c, mod_, p_);
  c.resize(r_, 0);
  return c;
}

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
  check(a);
  check(b);
  return FqElem(this, poly_mul(a.c_, b.c_));
}

FqElem Fq::pow(const FqElem& a, u128 e) const {
  check(a);
  FqElem result = one();
  FqElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FqElem Fq::inv(const FqElem& a) const {
  check(a);
  if (a.is_zero()) throw field_error("inverse of zero");
  return pow(a, q_ - 2);
}

FqElem Fq::frobenius(const FqElem& a) const { return pow(a, p_); }

const std::vector<std::pair<u64, int>>& Fq::factor_unit_order() const {
  if (unit_factors_.empty() && q_ > 2) unit_factors_ = factor_u128(q_ - 1);
  return unit_factors_;
}

u128 Fq::element_order(const FqElem& a) const {
  check(a);
  if (a.is_zero()) throw field_error("element_order of zero");
  u128 o = q_ - 1;
  for (const auto& [l, e] : factor_unit_order()) {
    for (int i = 0; i < e; ++i) {
      if (o % l == 0 && pow(a, o / l) == one())
        o /= l;
      else
        break;
    }
  }
  return o;
}

const FqElem& Fq::generator() const {
  if (!gen_) {
    for (u64 code = 1;; ++code) {
      if ((u128)code >= q_) throw field_error("no generator found");
      FqElem g = from_code(code);
      if (g.is_zero()) continue;
      bool ok = true;
      for (const auto& [l, e] : factor_unit_order()) {
        (void)e;
        if (pow(g, (q_ - 1) / l) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_ = std::make_unique<FqElem>(g);
        break;
      }
    }
  }
  return *gen_;
}

FqElem Fq::root_of_unity(u128 n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    throw field_error("root_of_unity: order does not divide q - 1");
  if (n == 1) return one();
  return pow(generator(), (q_ - 1) / n);
}

bool Fq::is_square(const FqElem& a) const {
  check(a);
  if (p_ == 2) return true;
  if (a.is_zero()) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

unsigned Fq::frobenius_degree(const FqElem& a) const {
  check(a);
  FqElem y = a;
  for (unsigned d = 1; d <= r_; ++d) {
    y = frobenius(y);
    if (y == a) {
      if (r_ % d != 0) throw field_error("frobenius_degree: internal error");
      return d;
    }
  }
  throw field_error("frobenius_degree: did not stabilize");
}

FqElem Fq::lambda_reduced(u128 n) const {
  u128 np = n;
  while (np % p_ == 0) np /= p_;
  FqElem w = root_of_unity(np);
  return add(w, inv(w));
}

// ---- FqElem ----

const Fq& FqElem::field() const {
  if (!field_) throw field_error("uninitialized element");
  return *field_;
}

bool FqElem::is_zero() const {
  for (auto x : c_)
    if (x) return false;
  return true;
}

FqElem FqElem::operator+(const FqElem& o) const { return field().add(*this, o); }
FqElem FqElem::operator-(const FqElem& o) const { return field().sub(*this, o); }
FqElem FqElem::operator*(const FqElem& o) const { return field().mul(*this, o); }
FqElem FqElem::operator-() const { return field().neg(*this); }

bool FqElem::operator==(const FqElem& o) const {
  if (!field_ || !o.field_ || !field_->same_field(*o.field_))
    throw field_error("field mismatch");
  return c_ == o.c_;
}

FqElem FqElem::inv() const { return field().inv(*this); }
FqElem FqElem::pow(u128 e) const { return field().pow(*this, e); }

u64 FqElem::code() const {
  u64 v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * field().p() + c_[i];
  return v;
}

}  // namespace tmc
