#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "qchow/inertia.hpp"

using namespace qchow;

TEST_CASE("weights and canonical bezout pair") {
  Weights w = Weights::make(4, 6);
  CHECK(w.d == 2);
  CHECK(w.A == 2);
  CHECK(w.B == 3);
  CHECK(w.e == 12);
  CHECK(w.n == 1);
  CHECK(w.m == -1);
  CHECK(w.m * w.a + w.n * w.b == w.d);
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      Weights v = Weights::make(a, b);
      CHECK(v.m * a + v.n * b == v.d);
      CHECK(v.n >= 1);
      CHECK(v.n <= v.A);
    }
  CHECK_THROWS(Weights::make(0, 3));
  CHECK_THROWS(Weights::make_with_bezout(4, 6, 1, 1));
}

TEST_CASE("census of P(4,6) matches the inertia picture") {
  Weights w = Weights::make(4, 6);
  auto comps = census(w);
  REQUIRE(comps.size() == 8);

  // two one-dimensional sectors of age 0
  CHECK(comps[0].sector == Sector{SectorType::OneDim, 0});
  CHECK(comps[1].sector == Sector{SectorType::OneDim, 1});
  CHECK(comps[0].dimension == 1);
  CHECK(comps[0].age == Rational(0));
  CHECK(comps[1].age == Rational(0));
  CHECK(comps[0].band_order == 1);
  CHECK(comps[1].band_order == 2);
  CHECK(comps[0].stabilizer == 2);

  std::map<long, Rational> over0, overinf;
  for (const auto& c : comps) {
    if (c.sector.type == SectorType::Point0) {
      over0[c.sector.label] = c.age;
      CHECK(c.stabilizer == 4);
    }
    if (c.sector.type == SectorType::PointInf) {
      overinf[c.sector.label] = c.age;
      CHECK(c.stabilizer == 6);
    }
  }
  CHECK(over0 == std::map<long, Rational>{{1, Rational(1, 2)}, {3, Rational(1, 2)}});
  CHECK(overinf == std::map<long, Rational>{{1, Rational(2, 3)},
                                            {2, Rational(1, 3)},
                                            {4, Rational(2, 3)},
                                            {5, Rational(1, 3)}});
}

TEST_CASE("degenerate censuses") {
  auto c11 = census(Weights::make(1, 1));
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].sector.type == SectorType::OneDim);

  auto c22 = census(Weights::make(2, 2));
  REQUIRE(c22.size() == 2);
  for (const auto& c : c22) CHECK(c.sector.type == SectorType::OneDim);
  CHECK(Weights::make(2, 2).degenerate());
  CHECK_FALSE(Weights::make(4, 6).degenerate());
}

TEST_CASE("ages") {
  Weights w = Weights::make(4, 6);
  CHECK(age(w, make_sector(w, SectorType::Point0, 1)) == Rational(1, 2));
  CHECK(age(w, make_sector(w, SectorType::PointInf, 2)) == Rational(1, 3));
  CHECK(age(w, make_sector(w, SectorType::OneDim, 1)) == Rational(0));
  CHECK_THROWS(make_sector(w, SectorType::Point0, 2));  // divisible by a/d
}

TEST_CASE("involution") {
  Weights w = Weights::make(4, 6);
  CHECK(involution_sector(w, {SectorType::Point0, 1}) == Sector{SectorType::Point0, 3});
  CHECK(involution_sector(w, {SectorType::OneDim, 0}) == Sector{SectorType::OneDim, 0});
  CHECK(involution_sector(w, {SectorType::PointInf, 2}) == Sector{SectorType::PointInf, 4});

  for (long a = 1; a <= 12; ++a) {
    for (long b = 1; b <= 12; ++b) {
      Weights v = Weights::make(a, b);
      for (const auto& comp : census(v)) {
        Sector dual = involution_sector(v, comp.sector);
        CHECK(involution_sector(v, dual) == comp.sector);
        // age + dual age = 1 - dim
        CHECK(age(v, comp.sector) + age(v, dual) == Rational(1 - comp.dimension));
        // age denominators divide lcm(a, b)
        CHECK(denominator_bound_check(comp.age, v));
      }
    }
  }
}

TEST_CASE("census counts for all small weights") {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      Weights v = Weights::make(a, b);
      CHECK(long(census(v).size()) == v.d + (a - v.d) + (b - v.d));
      CHECK(long(stringy_basis(v).size()) == a + b);
    }
}

TEST_CASE("stringy basis of P(4,6)") {
  Weights w = Weights::make(4, 6);
  auto basis = stringy_basis(w);
  REQUIRE(basis.size() == 10);

  // x and y: the fundamental classes picked by the Bezout pair, of minimal age
  BasisClass x{Sector{SectorType::Point0, w.n}, ClassKind::Fundamental, Rational(0)};
  BasisClass y{Sector{SectorType::PointInf, (w.m % w.b + w.b) % w.b}, ClassKind::Fundamental,
               Rational(0)};
  auto find = [&](const BasisClass& c) {
    return std::find(basis.begin(), basis.end(), c);
  };
  REQUIRE(find(x) != basis.end());
  REQUIRE(find(y) != basis.end());
  CHECK(find(x)->degree == Rational(1, 2));
  CHECK(find(y)->sector.label == 5);
  CHECK(find(y)->degree == Rational(1, 3));

  std::multiset<Rational> degrees;
  for (const auto& c : basis) degrees.insert(c.degree);
  std::multiset<Rational> expected{Rational(0),    Rational(0),    Rational(1),    Rational(1),
                                   Rational(1, 2), Rational(1, 2), Rational(2, 3), Rational(1, 3),
                                   Rational(2, 3), Rational(1, 3)};
  CHECK(degrees == expected);
}

TEST_CASE("stringy basis of P(1,1)") {
  auto basis = stringy_basis(Weights::make(1, 1));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].kind == ClassKind::Fundamental);
  CHECK(basis[0].degree == Rational(0));
  CHECK(basis[1].kind == ClassKind::Point);
  CHECK(basis[1].degree == Rational(1));
}

TEST_CASE("weighted projective space census") {
  auto p2 = wps_census({1, 1, 1});
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].twist == Rational(0));
  CHECK(p2[0].age == Rational(0));

  auto p12 = wps_census({1, 2});
  REQUIRE(p12.size() == 2);
  CHECK(p12[1].twist == Rational(1, 2));
  CHECK(p12[1].age == Rational(1, 2));
  CHECK(p12[1].fixed == std::vector<size_t>{1});

  CHECK_THROWS(wps_census({}));
}

TEST_CASE("wps census agrees with the P(a,b) census") {
  for (long a = 1; a <= 8; ++a) {
    for (long b = 1; b <= 8; ++b) {
      Weights w = Weights::make(a, b);
      // multiset of (dimension, age, band order)
      std::multiset<std::tuple<int, Rational, long>> from_census, from_wps;
      for (const auto& c : census(w))
        from_census.insert({c.dimension, c.age, c.band_order});
      for (const auto& s : wps_census({a, b})) {
        long band = s.twist.den().get_si();
        from_wps.insert({int(s.fixed.size()) - 1, s.age, band});
      }
      CHECK(from_census == from_wps);
    }
  }
}

TEST_CASE("denominator bound check") {
  Weights w = Weights::make(4, 6);
  CHECK(denominator_bound_check(Rational(w.d, w.a * w.b), w));   // 1/lcm
  CHECK_FALSE(denominator_bound_check(Rational(1, w.a * w.b), w));
  CHECK(denominator_bound_check(Rational(0), w));
}

TEST_CASE("stringy pairing blocks") {
  Weights w = Weights::make(1, 1);
  auto basis = stringy_basis(w);
  auto g = stringy_pairing(w);
  REQUIRE(basis.size() == 2);
  CHECK(g[0][1] == Rational(1));  // <1, pt> = 1 on P^1
  CHECK(g[0][0] == Rational(0));
  CHECK(g[1][1] == Rational(0));

  Weights w46 = Weights::make(4, 6);
  auto basis46 = stringy_basis(w46);
  auto g46 = stringy_pairing(w46);
  for (size_t i = 0; i < basis46.size(); ++i) {
    size_t nonzero = 0;
    for (size_t j = 0; j < basis46.size(); ++j) {
      CHECK(g46[i][j] == g46[j][i]);
      if (!g46[i][j].is_zero()) {
        ++nonzero;
        CHECK(basis46[j].sector == involution_sector(w46, basis46[i].sector));
        CHECK(basis46[i].degree + basis46[j].degree == Rational(1));
      }
    }
    CHECK(nonzero == 1);
  }
}
