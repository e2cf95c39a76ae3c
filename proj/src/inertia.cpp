#include "qchow/inertia.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qchow {

namespace {

long positive_mod(long v, long mod) {
  long r = v % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

Weights Weights::make(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("Weights: a, b must be >= 1");
  Weights w;
  w.a = a;
  w.b = b;
  w.d = std::gcd(a, b);
  w.A = a / w.d;
  w.B = b / w.d;
  w.e = a / w.d * b;
  // smallest n > 0 with n*B = 1 (mod A); then m = (d - n*b)/a
  long n = 1;
  while (positive_mod(n * w.B - 1, w.A) != 0) ++n;
  w.n = n;
  w.m = (w.d - n * b) / a;
  return w;
}

Weights Weights::make_with_bezout(long a, long b, long m, long n) {
  Weights w = make(a, b);
  if (m * a + n * b != w.d)
    throw std::invalid_argument("Weights: (m, n) is not a Bezout pair for gcd(a, b)");
  w.m = m;
  w.n = n;
  return w;
}

std::string Sector::str() const {
  switch (type) {
    case SectorType::OneDim: return "one_dim:" + std::to_string(label);
    case SectorType::Point0: return "point0:" + std::to_string(label);
    case SectorType::PointInf: return "point_inf:" + std::to_string(label);
  }
  return "?";
}

std::string BasisClass::str() const {
  return sector.str() + (kind == ClassKind::Point ? ":pt" : "");
}

bool sector_valid(const Weights& w, const Sector& s) {
  switch (s.type) {
    case SectorType::OneDim:
      return s.label >= 0 && s.label < w.d;
    case SectorType::Point0:
      return s.label >= 0 && s.label < w.a && s.label % w.A != 0;
    case SectorType::PointInf:
      return s.label >= 0 && s.label < w.b && s.label % w.B != 0;
  }
  return false;
}

Sector make_sector(const Weights& w, SectorType type, long label) {
  Sector s{type, label};
  if (!sector_valid(w, s)) throw std::invalid_argument("Sector: invalid label " + s.str());
  return s;
}

Rational age(const Weights& w, const Sector& s) {
  if (!sector_valid(w, s)) throw std::invalid_argument("age: invalid sector " + s.str());
  switch (s.type) {
    case SectorType::OneDim:
      return Rational(0);
    case SectorType::Point0:
      return Rational(s.label * w.b, w.a).frac();
    case SectorType::PointInf:
      return Rational(s.label * w.a, w.b).frac();
  }
  return Rational(0);
}

Sector involution_sector(const Weights& w, const Sector& s) {
  if (!sector_valid(w, s)) throw std::invalid_argument("involution_sector: invalid sector");
  switch (s.type) {
    case SectorType::OneDim:
      return {SectorType::OneDim, positive_mod(w.d - s.label, w.d)};
    case SectorType::Point0:
      return {SectorType::Point0, w.a - s.label};
    case SectorType::PointInf:
      return {SectorType::PointInf, w.b - s.label};
  }
  return s;
}

namespace {

long band_order_of(const Weights& w, const Sector& s) {
  switch (s.type) {
    case SectorType::OneDim:
      return s.label == 0 ? 1 : w.d / std::gcd(s.label, w.d);
    case SectorType::Point0:
      return w.a / std::gcd(s.label, w.a);
    case SectorType::PointInf:
      return w.b / std::gcd(s.label, w.b);
  }
  return 1;
}

long stabilizer_of(const Weights& w, const Sector& s) {
  switch (s.type) {
    case SectorType::OneDim: return w.d;
    case SectorType::Point0: return w.a;
    case SectorType::PointInf: return w.b;
  }
  return 1;
}

}  // namespace

std::vector<InertiaComponent> census(const Weights& w) {
  std::vector<InertiaComponent> out;
  out.reserve(size_t(w.a + w.b - w.d));
  for (long j = 0; j < w.d; ++j) {
    Sector s{SectorType::OneDim, j};
    out.push_back({s, 1, band_order_of(w, s), w.d, Rational(0)});
  }
  for (long k = 1; k < w.a; ++k) {
    if (k % w.A == 0) continue;
    Sector s{SectorType::Point0, k};
    out.push_back({s, 0, band_order_of(w, s), w.a, age(w, s)});
  }
  for (long k = 1; k < w.b; ++k) {
    if (k % w.B == 0) continue;
    Sector s{SectorType::PointInf, k};
    out.push_back({s, 0, band_order_of(w, s), w.b, age(w, s)});
  }
  return out;
}

std::vector<BasisClass> stringy_basis(const Weights& w) {
  std::vector<BasisClass> out;
  out.reserve(size_t(w.a + w.b));
  for (const auto& comp : census(w))
    out.push_back({comp.sector, ClassKind::Fundamental, comp.age});
  for (long j = 0; j < w.d; ++j)
    out.push_back({Sector{SectorType::OneDim, j}, ClassKind::Point, Rational(1)});
  return out;
}

bool denominator_bound_check(const Rational& value, const Weights& w) {
  return (value * Rational(w.e)).is_integer();
}

std::vector<WpsSector> wps_census(const std::vector<long>& weights) {
  if (weights.empty()) throw std::invalid_argument("wps_census: empty weight list");
  for (long a : weights)
    if (a < 1) throw std::invalid_argument("wps_census: weights must be >= 1");
  std::set<Rational> twists;
  for (long a : weights)
    for (long k = 0; k < a; ++k) twists.insert(Rational(k, a));
  std::vector<WpsSector> out;
  for (const Rational& lambda : twists) {
    WpsSector sec;
    sec.twist = lambda;
    Rational total(0);
    for (size_t i = 0; i < weights.size(); ++i) {
      Rational t = lambda * Rational(weights[i]);
      if (t.is_integer())
        sec.fixed.push_back(i);
      else
        total += t.frac();
    }
    sec.age = total;
    out.push_back(std::move(sec));
  }
  return out;
}

std::vector<std::vector<Rational>> stringy_pairing(const Weights& w) {
  std::vector<BasisClass> basis = stringy_basis(w);
  size_t nb = basis.size();
  std::vector<std::vector<Rational>> g(nb, std::vector<Rational>(nb, Rational(0)));
  for (size_t i = 0; i < nb; ++i) {
    for (size_t j = 0; j < nb; ++j) {
      const BasisClass& u = basis[i];
      const BasisClass& v = basis[j];
      if (v.sector != involution_sector(w, u.sector)) continue;
      if (u.degree + v.degree != Rational(1)) continue;
      g[i][j] = Rational(1, stabilizer_of(w, u.sector));
    }
  }
  return g;
}

}  // namespace qchow
