#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qchow/rational.hpp"

namespace qchow {

/// The pair of weights of a weighted projective line P(a,b), together with
/// the derived constants and a Bezout pair m*a + n*b = d.
///
/// The canonical pair takes the smallest n > 0 with n*b = d (mod a)
/// (equivalently n = B^{-1} mod A, so 0 < n <= A); other valid pairs can be
/// supplied explicitly and differ by (m, n) -> (m + t*B, n - t*A).
struct Weights {
  long a = 1;
  long b = 1;
  long d = 1;  // gcd(a, b)
  long A = 1;  // a / d
  long B = 1;  // b / d
  long e = 1;  // lcm(a, b)
  long m = 0;
  long n = 1;

  static Weights make(long a, long b);
  static Weights make_with_bezout(long a, long b, long m, long n);

  /// d = a (no point sectors over 0) or d = b: the generators x or y live on
  /// a one-dimensional sector instead, and outputs carry a warning flag.
  bool degenerate() const { return d == a || d == b; }
};

enum class SectorType { OneDim, Point0, PointInf };

/// Connected-component label of the cyclotomic inertia of P(a,b):
/// a residue j mod d for the one-dimensional sectors, or a residue k mod a
/// (resp. mod b) not divisible by a/d (resp. b/d) for the point sectors.
struct Sector {
  SectorType type = SectorType::OneDim;
  long label = 0;

  friend bool operator==(const Sector&, const Sector&) = default;
  friend auto operator<=>(const Sector&, const Sector&) = default;

  std::string str() const;
};

Sector make_sector(const Weights& w, SectorType type, long label);
bool sector_valid(const Weights& w, const Sector& s);

struct InertiaComponent {
  Sector sector;
  int dimension = 0;       // 1 for OneDim sectors, 0 otherwise
  long band_order = 1;     // order of the labeling element (the r of I_mu(r))
  long stabilizer = 1;     // order of the automorphism group of a generic point
  Rational age;
};

enum class ClassKind { Fundamental, Point };

/// Basis element of the stringy Chow group: the fundamental class of a
/// sector, or the point class on a one-dimensional sector.
struct BasisClass {
  Sector sector;
  ClassKind kind = ClassKind::Fundamental;
  Rational degree;

  friend bool operator==(const BasisClass& u, const BasisClass& v) {
    return u.sector == v.sector && u.kind == v.kind;
  }
  friend auto operator<=>(const BasisClass& u, const BasisClass& v) {
    if (auto c = u.sector <=> v.sector; c != 0) return c;
    return u.kind <=> v.kind;
  }

  std::string str() const;
};

/// Age of the sector: the fractional rotation number of the tangent line
/// T P(a,b) = O(a+b) under the labeling element.
Rational age(const Weights& w, const Sector& s);

/// Band inversion: negates the label.
Sector involution_sector(const Weights& w, const Sector& s);

/// All inertia components: d one-dimensional, a-d over 0, b-d over infinity.
std::vector<InertiaComponent> census(const Weights& w);

/// Fundamental class of every component plus the point class of every
/// one-dimensional component; a+b classes in total.
std::vector<BasisClass> stringy_basis(const Weights& w);

/// True iff value * lcm(a,b) is an integer (the denominator bound given by
/// the exponent of the automorphism groups).
bool denominator_bound_check(const Rational& value, const Weights& w);

/// Inertia sector of a general weighted projective space, indexed by the
/// twist lambda in [0,1): lambda fixes the coordinates whose weight it
/// multiplies into an integer.
struct WpsSector {
  Rational twist;
  std::vector<size_t> fixed;  // indices of fixed weights
  Rational age;
};

std::vector<WpsSector> wps_census(const std::vector<long>& weights);

/// Intersection pairing on the stringy basis in the non-rigidified
/// normalization: the point class of a sector with generic stabilizer mu_s
/// integrates to 1/s.  Nonzero only between classes on involution-dual
/// sectors with degrees summing to 1.
std::vector<std::vector<Rational>> stringy_pairing(const Weights& w);

}  // namespace qchow
