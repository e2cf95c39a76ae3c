#include <random>

#include "doctest.h"
#include "qchow/polynomial.hpp"

using namespace qchow;

namespace {
Polynomial P(const char* s) { return Polynomial::parse(s); }
}

TEST_CASE("free products") {
  CHECK(P("x") * P("y") == P("x*y"));
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("2*x^2 - 3*y^3") * Polynomial::one() == P("2*x^2 - 3*y^3"));
}

TEST_CASE("homogeneity") {
  Grading g{Rational(0), Rational(1, 2), Rational(1, 3), Rational(5, 6)};
  CHECK(is_homogeneous(P("x*y - q"), g) == Rational(5, 6));
  CHECK(is_homogeneous(P("zeta^2 - 1"), g) == Rational(0));
  CHECK(!is_homogeneous(P("x + y"), g).has_value());
}

TEST_CASE("parse accepts the term grammar") {
  CHECK(P("3/2*zeta^2*x*y^3") == Polynomial(Monomial{2, 1, 3, 0}, Rational(3, 2)));
  CHECK(P("-x + 2") == P("2 - x"));
  CHECK(P("0*x") == Polynomial::zero());
  CHECK(P("q^2").coefficient(Monomial{0, 0, 0, 2}) == Rational(1));
  CHECK_THROWS(P("w^2"));
  CHECK_THROWS(P(""));
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 4), c(-9, 9), d(1, 5), n(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p;
    int terms = n(rng);
    for (int t = 0; t < terms; ++t) {
      int cc = c(rng);
      if (cc == 0) cc = 3;
      p.add_term(Monomial{unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng))},
                 Rational(cc, d(rng)));
    }
    CHECK(Polynomial::parse(p.str()) == p);
  }
}

TEST_CASE("q truncation and coefficients") {
  Polynomial p = P("x + 3*q*y + 1/2*q^2");
  CHECK(p.truncate_q(1) == P("x + 3*q*y"));
  CHECK(p.at_q_zero() == P("x"));
  CHECK(p.q_coefficient(1) == P("3*y"));
  CHECK(p.q_coefficient(2) == P("1/2"));
}
