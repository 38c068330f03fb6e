#ifndef TMC_RATIONAL_HPP
#define TMC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tmc {

// Exact rational arithmetic for Euler characteristics, genus formulas and
// enumeration bounds.  Magnitudes stay tiny (numerators bounded by a few
// times the group order), so int64 components are plenty.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den - y.num * x.den, x.den * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num * y.num, x.den * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(x.num * y.den, x.den * y.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num * y.den < y.num * x.den;
  }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return x.num * y.den <= y.num * x.den;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) { return y <= x; }

  Rational abs() const { return num < 0 ? Rational(-num, den) : *this; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace tmc

#endif
