#pragma once

#include <utility>
#include <vector>

#include "qchow/inertia.hpp"
#include "qchow/rational.hpp"

namespace qchow {

/// A genus-g twisted curve whose coarse space is smooth, with cyclic stack
/// structure of the given orders at the marked points (a "football" when
/// g = 0 with two or three markings).
struct Football {
  long genus = 0;
  std::vector<long> marking_orders;
};

/// Class in Pic of a two-marked genus-0 football C_{a,b}, generated by the
/// two point bundles L_0, L_inf subject to a*L_0 = b*L_inf, plus optional
/// torsion generators L_D of order-D markings subject to D*L_D = b*L_inf.
struct PicClass {
  long z0 = 0;
  long zinf = 0;
  std::vector<std::pair<long, long>> torsion;  // (order D, exponent)

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Representative with 0 <= z0 < a and torsion exponents reduced mod their
/// orders; the degree is unchanged.
PicClass pic_canonical(const PicClass& p, long a, long b);

Rational pic_degree(const PicClass& p, long a, long b);

/// K-theory class on a twisted curve: rank, degree, and the age of the
/// class at each marked point (negative ages occur for torsion classes).
struct SheafClass {
  long rank = 0;
  Rational degree;
  std::vector<Rational> ages;

  friend SheafClass operator+(const SheafClass& s, const SheafClass& t);
};

/// chi(E) = rk(E) (1 - g) + deg(E) - sum of marking ages.
Rational euler_char(const SheafClass& s, const Football& c);

/// The pushforward of the character-k representation of the order-r marking:
/// rank 0, degree 1/r, single marking age -(r-1)/r for k = 0 and 1/r else.
SheafClass torsion_class(long r, long k);

/// Section count of L_0^{z0} L_inf^{zinf} on the two-marked genus-0
/// football: max(0, floor(z0/a) + floor(zinf/b) + 1).
long h0_genus0(const PicClass& p, long a, long b);

/// A genus-0 twisted stable map datum: target weights, source curve, curve
/// class k * (d * fundamental), and the inertia sector of each marking.
struct MapSpec {
  Weights target;
  Football curve;
  long beta_multiple = 1;
  std::vector<Sector> marking_sectors;
};

/// chi(f^* T) + n - 3 where chi is computed by Riemann-Roch with
/// deg f^* T = k d (a+b) / (ab) and the marking ages of the sectors.
Rational virtual_dim(const MapSpec& m);

/// All canonical Picard classes on C_{a,b,D} of degree k*d/(ab) with
/// z0 = n (mod a), zinf = m (mod b), and a nonzero torsion exponent at the
/// third marking when D > 1 (representability there).  Requires D | d.
std::vector<PicClass> solve_map_picard(const Weights& w, long k, long D);

}  // namespace qchow
