#include "qchow/picard.hpp"

#include <numeric>
#include <stdexcept>

namespace qchow {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

PicClass pic_canonical(const PicClass& p, long a, long b) {
  PicClass r = p;
  // D*L_D = b*L_inf: reducing a torsion exponent by t*D adds t*b to zinf.
  for (auto& [order, z] : r.torsion) {
    if (order < 1) throw std::invalid_argument("pic_canonical: torsion order must be >= 1");
    long t = floor_div(z, order);
    z -= t * order;
    r.zinf += t * b;
  }
  // a*L_0 = b*L_inf: shifting z0 by -s*a adds s*b to zinf.
  long s = floor_div(r.z0, a);
  r.z0 -= s * a;
  r.zinf += s * b;
  return r;
}

Rational pic_degree(const PicClass& p, long a, long b) {
  Rational deg = Rational(p.z0, a) + Rational(p.zinf, b);
  for (const auto& [order, z] : p.torsion) deg += Rational(z, order);
  return deg;
}

SheafClass operator+(const SheafClass& s, const SheafClass& t) {
  if (s.ages.size() != t.ages.size())
    throw std::invalid_argument("SheafClass: mismatched marking counts");
  SheafClass r{s.rank + t.rank, s.degree + t.degree, s.ages};
  for (size_t i = 0; i < r.ages.size(); ++i) r.ages[i] += t.ages[i];
  return r;
}

Rational euler_char(const SheafClass& s, const Football& c) {
  if (s.ages.size() != c.marking_orders.size())
    throw std::invalid_argument("euler_char: age list does not match marking count");
  Rational chi = Rational(s.rank) * Rational(1 - c.genus) + s.degree;
  for (const Rational& a : s.ages) chi -= a;
  return chi;
}

SheafClass torsion_class(long r, long k) {
  if (r < 1 || k < 0 || k >= r) throw std::invalid_argument("torsion_class: need 0 <= k < r");
  Rational age = (k == 0) ? -Rational(r - 1, r) : Rational(1, r);
  return SheafClass{0, Rational(1, r), {age}};
}

long h0_genus0(const PicClass& p, long a, long b) {
  if (!p.torsion.empty())
    throw std::invalid_argument("h0_genus0: only two-marked footballs supported");
  long v = floor_div(p.z0, a) + floor_div(p.zinf, b) + 1;
  return v > 0 ? v : 0;
}

namespace {

long sector_band_order(const Weights& w, const Sector& s) {
  switch (s.type) {
    case SectorType::OneDim: return s.label == 0 ? 1 : w.d / std::gcd(s.label, w.d);
    case SectorType::Point0: return w.a / std::gcd(s.label, w.a);
    case SectorType::PointInf: return w.b / std::gcd(s.label, w.b);
  }
  return 1;
}

}  // namespace

Rational virtual_dim(const MapSpec& m) {
  if (m.curve.genus != 0) throw std::invalid_argument("virtual_dim: genus 0 only");
  if (m.curve.marking_orders.size() != m.marking_sectors.size())
    throw std::invalid_argument("virtual_dim: marking/sector count mismatch");
  const Weights& w = m.target;
  SheafClass pullback_tangent;
  pullback_tangent.rank = 1;
  pullback_tangent.degree = Rational(m.beta_multiple * w.d * (w.a + w.b), w.a * w.b);
  for (size_t i = 0; i < m.marking_sectors.size(); ++i) {
    const Sector& s = m.marking_sectors[i];
    if (m.curve.marking_orders[i] != sector_band_order(w, s))
      throw std::invalid_argument("virtual_dim: marking order differs from sector band order");
    pullback_tangent.ages.push_back(age(w, s));
  }
  Rational chi = euler_char(pullback_tangent, m.curve);
  return chi + Rational(long(m.marking_sectors.size()) - 3);
}

std::vector<PicClass> solve_map_picard(const Weights& w, long k, long D) {
  if (k < 1) throw std::invalid_argument("solve_map_picard: degree multiple must be >= 1");
  if (D < 1 || w.d % D != 0) throw std::invalid_argument("solve_map_picard: D must divide d");
  std::vector<PicClass> out;
  long z0 = ((w.n % w.a) + w.a) % w.a;  // unique canonical residue
  long m_mod_b = ((w.m % w.b) + w.b) % w.b;
  for (long zd = 0; zd < D; ++zd) {
    if (D > 1 && zd == 0) continue;  // third marking must be genuinely stacky
    // degree condition: z0/a + zinf/b + zd/D = k d / (a b)
    Rational zinf_r = (Rational(k * w.d, w.a * w.b) - Rational(z0, w.a) - Rational(zd, D)) * Rational(w.b);
    if (!zinf_r.is_integer()) continue;
    long zinf = zinf_r.floor_long();
    if (((zinf % w.b) + w.b) % w.b != m_mod_b) continue;
    PicClass cls{z0, zinf, {}};
    if (D > 1) cls.torsion.push_back({D, zd});
    out.push_back(pic_canonical(cls, w.a, w.b));
  }
  return out;
}

}  // namespace qchow
