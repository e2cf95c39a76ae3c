#include <random>

#include "doctest.h"
#include "qchow/picard.hpp"

using namespace qchow;

namespace {

// Sections of L_0^{z0} L_inf^{zinf} on the two-marked genus-0 football are
// the Laurent monomials s^t of the coarse coordinate with t*a + z0 >= 0 and
// -t*b + zinf >= 0; count them directly.
long h0_oracle(long z0, long zinf, long a, long b) {
  long lo = -(std::abs(z0) + 1), hi = std::abs(zinf) + 1, count = 0;
  for (long t = lo; t <= hi; ++t)
    if (t * a + z0 >= 0 && -t * b + zinf >= 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("picard canonical form") {
  CHECK(pic_canonical({4, -4, {}}, 4, 6) == PicClass{0, 2, {}});
  CHECK(pic_canonical({1, 0, {}}, 4, 6) == PicClass{1, 0, {}});
  CHECK(pic_canonical({6, -6, {}}, 4, 6) == PicClass{2, 0, {}});
  CHECK(pic_degree(pic_canonical({4, -4, {}}, 4, 6), 4, 6) == pic_degree({4, -4, {}}, 4, 6));
  // torsion exponents reduce mod their order, shifting through zinf
  PicClass with_torsion{0, 0, {{2, 3}}};
  PicClass canon = pic_canonical(with_torsion, 4, 6);
  CHECK(canon.torsion[0].second == 1);
  CHECK(pic_degree(canon, 4, 6) == pic_degree(with_torsion, 4, 6));
}

TEST_CASE("picard degrees") {
  // minimal map degree d/(ab) = d * deg O(1)
  CHECK(pic_degree({1, -1, {}}, 4, 6) == Rational(1, 12));
  CHECK(Rational(1, 12) == Rational(2) * Rational(1, 24));
  CHECK(pic_degree({0, 0, {}}, 4, 6) == Rational(0));
}

TEST_CASE("euler characteristics") {
  for (long g = 0; g <= 5; ++g) {
    Football c{g, {}};
    SheafClass structure_sheaf{1, Rational(0), {}};
    CHECK(euler_char(structure_sheaf, c) == Rational(1 - g));
  }
  for (long r = 2; r <= 12; ++r) {
    Football c{0, {r}};
    CHECK(torsion_class(r, 0).ages[0] == -Rational(r - 1, r));
    CHECK(euler_char(torsion_class(r, 0), c) == Rational(1));
    for (long k = 1; k < r; ++k) {
      CHECK(torsion_class(r, k).ages[0] == Rational(1, r));
      CHECK(euler_char(torsion_class(r, k), c) == Rational(0));
    }
  }
  CHECK(torsion_class(1, 0).ages[0] == Rational(0));
  CHECK(euler_char(torsion_class(1, 0), Football{0, {1}}) == Rational(1));
  CHECK_THROWS(euler_char(SheafClass{1, Rational(0), {Rational(0)}}, Football{0, {}}));
}

TEST_CASE("euler characteristic is additive") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> rk(0, 3), dn(-12, 12), dd(1, 8);
  Football c{1, {3, 5}};
  for (int i = 0; i < 50; ++i) {
    SheafClass s{rk(rng), Rational(dn(rng), dd(rng)), {Rational(dn(rng), dd(rng)), Rational(dn(rng), dd(rng))}};
    SheafClass t{rk(rng), Rational(dn(rng), dd(rng)), {Rational(dn(rng), dd(rng)), Rational(dn(rng), dd(rng))}};
    CHECK(euler_char(s + t, c) == euler_char(s, c) + euler_char(t, c));
  }
}

TEST_CASE("section counts") {
  CHECK(h0_genus0({4, -4, {}}, 4, 6) == 1);   // L^a for the minimal map
  CHECK(h0_genus0({6, -6, {}}, 4, 6) == 1);   // L^b
  CHECK(h0_genus0({1, -1, {}}, 4, 6) == 0);
  // invariance under the relation shift
  CHECK(h0_genus0({4 + 4, -4 - 6, {}}, 4, 6) == 1);
}

TEST_CASE("section counts agree with the monomial oracle") {
  for (auto [a, b] : {std::pair<long, long>{4, 6}, {2, 3}, {6, 10}}) {
    for (long z0 = -20; z0 <= 20; ++z0)
      for (long zinf = -20; zinf <= 20; ++zinf)
        CHECK(h0_genus0({z0, zinf, {}}, a, b) == h0_oracle(z0, zinf, a, b));
  }
}

TEST_CASE("serre duality on P(1,1)") {
  // h^0 - h^1 = chi with h^1 the sections of the dual class K - D
  for (long z0 = -10; z0 <= 10; ++z0) {
    for (long zinf = -10; zinf <= 10; ++zinf) {
      PicClass L{z0, zinf, {}};
      SheafClass cls{1, pic_degree(L, 1, 1), {Rational(0), Rational(0)}};
      Rational chi = euler_char(cls, Football{0, {1, 1}});
      long h0 = h0_genus0(L, 1, 1);
      long h1 = h0_genus0({-1 - z0, -1 - zinf, {}}, 1, 1);
      CHECK(Rational(h0 - h1) == chi);
    }
  }
}

TEST_CASE("degree bound against the coarse generator") {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      Weights w = Weights::make(a, b);
      for (long z0 = -20; z0 <= 20; ++z0)
        for (long zinf = -20; zinf <= 20; ++zinf)
          CHECK(denominator_bound_check(pic_degree({z0, zinf, {}}, a, b), w));
    }
}

TEST_CASE("virtual dimensions") {
  {
    MapSpec spec{Weights::make(1, 1), Football{0, {1, 1, 1}}, 1,
                 {Sector{SectorType::OneDim, 0}, Sector{SectorType::OneDim, 0},
                  Sector{SectorType::OneDim, 0}}};
    CHECK(virtual_dim(spec) == Rational(3));
  }
  {
    Weights w = Weights::make(4, 6);
    MapSpec spec{w, Football{0, {4, 6, 1}}, 1,
                 {Sector{SectorType::Point0, 1}, Sector{SectorType::PointInf, 5},
                  Sector{SectorType::OneDim, 0}}};
    CHECK(virtual_dim(spec) == Rational(1));
  }
  {
    // degree-zero constant maps through a one-dimensional target
    Weights w = Weights::make(4, 6);
    MapSpec spec{w, Football{0, {1, 1, 1}}, 0,
                 {Sector{SectorType::OneDim, 0}, Sector{SectorType::OneDim, 0},
                  Sector{SectorType::OneDim, 0}}};
    CHECK(virtual_dim(spec) == Rational(1));
  }
  {
    MapSpec bad{Weights::make(4, 6), Football{0, {3, 6, 1}}, 1,
                {Sector{SectorType::Point0, 1}, Sector{SectorType::PointInf, 5},
                 Sector{SectorType::OneDim, 0}}};
    CHECK_THROWS(virtual_dim(bad));
  }
}

TEST_CASE("map picard solver") {
  Weights w = Weights::make(4, 6);
  auto sols = solve_map_picard(w, 1, 1);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].z0 == 1);
  CHECK(((sols[0].zinf - w.m) % w.b) == 0);
  CHECK(pic_degree(sols[0], 4, 6) == Rational(1, 12));

  CHECK(solve_map_picard(w, 1, 2).empty());

  auto p1 = solve_map_picard(Weights::make(1, 1), 1, 1);
  REQUIRE(p1.size() == 1);
  CHECK(pic_degree(p1[0], 1, 1) == Rational(1));

  CHECK_THROWS(solve_map_picard(w, 1, 3));  // 3 does not divide d = 2
}

TEST_CASE("no twisted minimal maps for any divisor") {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      Weights w = Weights::make(a, b);
      if (w.d == a || w.d == b) continue;
      for (long D = 2; D <= w.d; ++D)
        if (w.d % D == 0) CHECK(solve_map_picard(w, 1, D).empty());
    }
}
