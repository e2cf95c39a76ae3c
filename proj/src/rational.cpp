#include "qchow/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qchow {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  size_t begin = s.find_first_not_of(" \t");
  size_t end = s.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw std::invalid_argument("Rational: empty string");
  std::string t(s.substr(begin, end - begin + 1));
  mpq_class v;
  if (v.set_str(t, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + t + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + t + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

long Rational::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational::floor_long: out of range");
  return q.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qchow
