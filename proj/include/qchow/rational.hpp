#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qchow {

/// Exact rational number backed by GMP.  Always kept in canonical form:
/// positive denominator, gcd(|num|, den) = 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= *this.
  Rational floor() const;
  /// Fractional part in [0, 1).
  Rational frac() const { return *this - floor(); }
  Rational abs() const;

  /// floor() as a machine integer; only valid for small values.
  long floor_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  /// "p" when integral, otherwise "p/q".
  std::string str() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qchow
