#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qchow/rational.hpp"

namespace qchow {

/// Power product zeta^zeta_exp * x^x_exp * y^y_exp * q^q_exp.
struct Monomial {
  unsigned zeta = 0;
  unsigned x = 0;
  unsigned y = 0;
  unsigned q = 0;

  bool is_unit() const { return zeta == 0 && x == 0 && y == 0 && q == 0; }
  unsigned total_degree() const { return zeta + x + y + q; }

  bool divides(const Monomial& m) const {
    return zeta <= m.zeta && x <= m.x && y <= m.y && q <= m.q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.zeta + b.zeta, a.x + b.x, a.y + b.y, a.q + b.q};
  }
  /// Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.zeta - b.zeta, a.x - b.x, a.y - b.y, a.q - b.q};
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    return {a.zeta > b.zeta ? a.zeta : b.zeta, a.x > b.x ? a.x : b.x,
            a.y > b.y ? a.y : b.y, a.q > b.q ? a.q : b.q};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical storage order: lexicographic on (x, y, zeta), then q.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    if (auto c = a.zeta <=> b.zeta; c != 0) return c;
    return a.q <=> b.q;
  }

  std::string str() const;
};

/// Rational degree assignment for the four generators.
struct Grading {
  Rational zeta;
  Rational x;
  Rational y;
  Rational q;

  Rational degree(const Monomial& m) const {
    return Rational(long(m.zeta)) * zeta + Rational(long(m.x)) * x +
           Rational(long(m.y)) * y + Rational(long(m.q)) * q;
  }
};

/// Sparse polynomial in zeta, x, y, q with exact rational coefficients.
/// Terms are kept in canonical order with no zero coefficients stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Rational c) { add_term({}, std::move(c)); }
  Polynomial(const Monomial& m, Rational c) { add_term(m, std::move(c)); }

  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial var_zeta(unsigned e = 1) { return Polynomial({e, 0, 0, 0}, 1); }
  static Polynomial var_x(unsigned e = 1) { return Polynomial({0, e, 0, 0}, 1); }
  static Polynomial var_y(unsigned e = 1) { return Polynomial({0, 0, e, 0}, 1); }
  static Polynomial var_q(unsigned e = 1) { return Polynomial({0, 0, 0, e}, 1); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, Rational c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Drop all terms with q-exponent above `bound`.
  Polynomial truncate_q(unsigned bound) const;
  /// The q^0 part (classical limit).
  Polynomial at_q_zero() const;
  /// Coefficient polynomial of q^power (with the q factor removed).
  Polynomial q_coefficient(unsigned power) const;

  /// Remap each monomial through `f`, combining collisions additively.
  Polynomial map_monomials(const std::function<Monomial(const Monomial&)>& f) const;

  /// Common degree of all terms under `g`, or nullopt if mixed or zero.
  std::optional<Rational> homogeneous_degree(const Grading& g) const;

  /// Terms rendered as `c * zeta^i * x^j * y^k * q^l` joined by +/-.
  std::string str() const;
  /// Inverse of str(); accepts optional coefficients, powers and whitespace.
  static Polynomial parse(std::string_view s);

private:
  TermMap terms_;
};

inline std::optional<Rational> is_homogeneous(const Polynomial& p, const Grading& g) {
  return p.homogeneous_degree(g);
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qchow
