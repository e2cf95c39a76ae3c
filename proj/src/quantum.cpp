#include "qchow/quantum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "qchow/picard.hpp"

namespace qchow {

namespace {

constexpr std::uint64_t kGuardSeed = 0x51c8005eedULL;

long positive_mod(long v, long mod) {
  long r = v % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

RingPresentation build_presentation(const Weights& w, const PresentationOptions& opts) {
  RingPresentation pres;
  pres.weights = w;
  pres.quantum = opts.quantum;
  pres.grading = Grading{Rational(0), Rational(1, w.A), Rational(1, w.B),
                         Rational(1, w.A) + Rational(1, w.B)};
  unsigned twist = opts.zeta_factor ? unsigned(positive_mod(w.n - w.m, w.d)) : 0u;

  Polynomial r1({0, 1, 1, 0}, 1);
  if (opts.quantum) r1 -= Polynomial::var_q();
  Polynomial r2({0, unsigned(w.A), 0, 0}, Rational(w.A));
  r2 -= Polynomial({twist, 0, unsigned(w.B), 0}, Rational(w.B));
  Polynomial r3({unsigned(w.d), 0, 0, 0}, 1);
  r3 -= Polynomial::one();

  pres.relations = {r1, r2, r3};
  return pres;
}

RingPresentation quantum_presentation(const Weights& w) { return build_presentation(w, {}); }

RingPresentation classical_presentation(const Weights& w) {
  return build_presentation(w, {.quantum = false});
}

RewriteSystem ring_rewrite_system(const Weights& w, unsigned q_truncation,
                                  const PresentationOptions& opts) {
  unsigned twist_pos = opts.zeta_factor ? unsigned(positive_mod(w.n - w.m, w.d)) : 0u;
  unsigned twist_neg = opts.zeta_factor ? unsigned(positive_mod(w.m - w.n, w.d)) : 0u;

  std::vector<RewriteRule> rules;
  rules.push_back({Monomial{unsigned(w.d), 0, 0, 0}, Polynomial::one()});
  rules.push_back({Monomial{0, 1, 1, 0},
                   opts.quantum ? Polynomial::var_q() : Polynomial::zero()});
  rules.push_back({Monomial{0, 0, unsigned(w.B), 0},
                   Polynomial({twist_neg, unsigned(w.A), 0, 0}, Rational(w.A, w.B))});
  rules.push_back({Monomial{0, unsigned(w.A + 1), 0, 0},
                   opts.quantum
                       ? Polynomial({twist_pos, 0, unsigned(w.B - 1), 1}, Rational(w.B, w.A))
                       : Polynomial::zero()});
  return RewriteSystem(std::move(rules), q_truncation, w.B, w.A);
}

std::optional<size_t> StructureConstants::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || !(*it == m)) return std::nullopt;
  return size_t(it - basis.begin());
}

Rational StructureConstants::coefficient(size_t i, size_t j, size_t k, unsigned qpow) const {
  Monomial m = basis[k];
  m.q = qpow;
  return products[i][j].coefficient(m);
}

namespace {

StructureConstants make_structure_constants_unchecked(const Weights& w, unsigned truncation,
                                                      const PresentationOptions& opts) {
  RewriteSystem rs = ring_rewrite_system(w, truncation, opts);
  StructureConstants sc;
  sc.weights = w;
  sc.truncation = truncation;
  sc.basis = enumerate_normal_monomials(rs, unsigned(w.d));
  size_t nb = sc.basis.size();
  sc.products.assign(nb, std::vector<Polynomial>(nb));
  for (size_t i = 0; i < nb; ++i) {
    for (size_t j = i; j < nb; ++j) {
      Polynomial prod = Polynomial(sc.basis[i], 1) * Polynomial(sc.basis[j], 1);
      sc.products[i][j] = normal_form(prod, rs);
      if (j != i) sc.products[j][i] = sc.products[i][j];
    }
  }
  return sc;
}

}  // namespace

StructureConstants structure_constants(const Weights& w, unsigned truncation,
                                       const PresentationOptions& opts) {
  if (truncation < 1) throw std::invalid_argument("structure_constants: truncation must be >= 1");
  RewriteSystem rs = ring_rewrite_system(w, truncation, opts);
  if (!confluence_smoke_check(rs, 16, kGuardSeed))
    throw std::runtime_error("structure_constants: confluence guard failed for P(" +
                             std::to_string(w.a) + "," + std::to_string(w.b) + ")");
  return make_structure_constants_unchecked(w, truncation, opts);
}

std::pair<Sector, ClassKind> monomial_sector(const Weights& w, const Monomial& mono) {
  bool normal = mono.q == 0 && mono.zeta < unsigned(w.d) && (mono.x == 0 || mono.y == 0) &&
                mono.x <= unsigned(w.A) && mono.y < unsigned(w.B);
  if (!normal) throw std::invalid_argument("monomial_sector: " + mono.str() + " is not a normal monomial");
  long i = long(mono.zeta);
  if (mono.x == unsigned(w.A))
    return {Sector{SectorType::OneDim, positive_mod(w.n + i, w.d)}, ClassKind::Point};
  if (mono.x > 0)
    return {Sector{SectorType::Point0, positive_mod(long(mono.x) * w.n + i * w.A, w.a)},
            ClassKind::Fundamental};
  if (mono.y > 0)
    return {Sector{SectorType::PointInf, positive_mod(long(mono.y) * w.m + i * w.B, w.b)},
            ClassKind::Fundamental};
  return {Sector{SectorType::OneDim, i}, ClassKind::Fundamental};
}

namespace {

struct BasisInfo {
  std::vector<Rational> degree;
  std::vector<bool> is_point;  // point monomial zeta^i x^A
};

BasisInfo basis_info(const StructureConstants& sc) {
  const Weights& w = sc.weights;
  BasisInfo info;
  for (const Monomial& m : sc.basis) {
    info.degree.push_back(Rational(long(m.x), w.A) + Rational(long(m.y), w.B));
    info.is_point.push_back(m.x == unsigned(w.A) && w.A >= 1);
  }
  return info;
}

// Census value of the pairing between two fundamental-class monomials:
// 1/a over 0, 1/b over infinity, when the sectors are involution-dual and
// the degrees sum to 1; zero otherwise.
Rational fundamental_anchor(const Weights& w, const Monomial& u, const Monomial& v) {
  auto [su, ku] = monomial_sector(w, u);
  auto [sv, kv] = monomial_sector(w, v);
  if (ku != ClassKind::Fundamental || kv != ClassKind::Fundamental) return Rational(0);
  if (!(sv == involution_sector(w, su))) return Rational(0);
  Rational degsum = age(w, su) + age(w, sv);
  if (degsum != Rational(1)) return Rational(0);
  switch (su.type) {
    case SectorType::Point0: return Rational(1, w.a);
    case SectorType::PointInf: return Rational(1, w.b);
    case SectorType::OneDim: return Rational(0);
  }
  return Rational(0);
}

}  // namespace

PairingMatrix pairing_matrix(const StructureConstants& sc) {
  const Weights& w = sc.weights;
  if (sc.truncation < 1) throw std::invalid_argument("pairing_matrix: need q-truncation >= 1");
  BasisInfo info = basis_info(sc);
  size_t nb = sc.basis.size();

  // The point monomial dual to the unit: zeta^{(-n) mod d} x^A.
  Monomial unit_dual{unsigned(positive_mod(-w.n, w.d)), unsigned(w.A), 0, 0};
  RewriteSystem rs0 = ring_rewrite_system(w, sc.truncation, {.quantum = false});

  // Solve g(1, unit_dual) from Frobenius: g(u * v, 1) = g(u, v) for a
  // fundamental pair (u, v) whose classical product hits unit_dual.
  auto route = [&](Monomial u, Monomial v, Rational anchor) -> std::optional<Rational> {
    Polynomial prod = normal_form(Polynomial(u, 1) * Polynomial(v, 1), rs0);
    Rational c = prod.coefficient(unit_dual);
    if (c.is_zero()) return std::nullopt;
    if (anchor.is_zero()) return std::nullopt;
    return anchor / c;
  };

  std::optional<Rational> mu_x, mu_y;
  if (w.A >= 2) {
    Monomial v{unsigned(positive_mod(-w.n, w.d)), unsigned(w.A - 1), 0, 0};
    mu_x = route(Monomial{0, 1, 0, 0}, v, fundamental_anchor(w, Monomial{0, 1, 0, 0}, v));
  }
  if (w.B >= 2) {
    Monomial v{unsigned(positive_mod(-w.m, w.d)), 0, unsigned(w.B - 1), 0};
    mu_y = route(Monomial{0, 0, 1, 0}, v, fundamental_anchor(w, Monomial{0, 0, 1, 0}, v));
  }

  Rational mu;
  if (mu_x && mu_y) {
    if (!(*mu_x == *mu_y))
      throw std::runtime_error("pairing_matrix: Frobenius routes disagree (" + mu_x->str() +
                               " vs " + mu_y->str() + ")");
    mu = *mu_x;
  } else if (mu_x) {
    mu = *mu_x;
  } else if (mu_y) {
    mu = *mu_y;
  } else if (w.A == 1 && w.B == 1) {
    // P(d,d): no fundamental route exists; the point monomial is the class
    // of the B mu_a substack and integrates to 1/a.
    mu = Rational(1, w.a);
  } else {
    throw std::runtime_error("pairing_matrix: cannot determine point pairing");
  }

  PairingMatrix pm;
  pm.basis = sc.basis;
  pm.point_pairing = mu;
  pm.g.assign(nb, std::vector<Rational>(nb, Rational(0)));
  for (size_t i = 0; i < nb; ++i) {
    for (size_t j = 0; j < nb; ++j) {
      const Monomial& u = sc.basis[i];
      const Monomial& v = sc.basis[j];
      if (info.degree[i] + info.degree[j] != Rational(1)) continue;
      auto [su, ku] = monomial_sector(w, u);
      auto [sv, kv] = monomial_sector(w, v);
      if (!(sv == involution_sector(w, su))) continue;
      if (info.is_point[i] != info.is_point[j]) {
        pm.g[i][j] = mu;
      } else if (!info.is_point[i]) {
        pm.g[i][j] = fundamental_anchor(w, u, v);
      }
    }
  }

  // Nondegeneracy: with one partner per class this is a scaled permutation.
  for (size_t i = 0; i < nb; ++i) {
    size_t nonzero = 0;
    for (size_t j = 0; j < nb; ++j)
      if (!pm.g[i][j].is_zero()) ++nonzero;
    if (nonzero != 1)
      throw std::runtime_error("pairing_matrix: degenerate pairing at basis index " +
                               std::to_string(i));
  }
  return pm;
}

const CheckResult* RingReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Labels of monomials supported over 0 (resp. infinity), with the
// one-dimensional sectors embedded via their label times a/d (resp. b/d).
std::optional<long> over_zero_label(const Weights& w, const Monomial& m) {
  if (m.y > 0 || m.x > unsigned(w.A)) return std::nullopt;
  return positive_mod(long(m.x) * w.n + long(m.zeta) * w.A, w.a);
}

std::optional<long> over_inf_label(const Weights& w, const Monomial& m) {
  if (m.x == unsigned(w.A) && m.y == 0)
    return positive_mod((w.n + long(m.zeta)) * w.B, w.b);
  if (m.x > 0) return std::nullopt;
  return positive_mod(long(m.y) * w.m + long(m.zeta) * w.B, w.b);
}

}  // namespace

RingReport verify_ring(const Weights& w, unsigned truncation, const PresentationOptions& opts,
                       std::uint64_t guard_seed) {
  RingReport report;
  auto add = [&report](const std::string& name, bool ok, std::string detail = "") {
    report.checks.push_back({name, ok, std::move(detail)});
    if (!ok) report.ok = false;
  };

  RewriteSystem rs = ring_rewrite_system(w, truncation, opts);
  add("confluence", confluence_smoke_check(rs, 16, guard_seed));

  StructureConstants sc = make_structure_constants_unchecked(w, truncation, opts);
  size_t nb = sc.rank();
  report.rank = nb;
  add("rank", long(nb) == w.a + w.b,
      "rank " + std::to_string(nb) + ", expected " + std::to_string(w.a + w.b));

  RingPresentation pres = build_presentation(w, opts);

  // Relations are homogeneous and reduce to zero.
  {
    bool homog = true, vanish = true;
    std::string bad;
    for (const Polynomial& rel : pres.relations) {
      if (!rel.homogeneous_degree(pres.grading)) {
        homog = false;
        bad = rel.str();
      }
      if (!normal_form(rel, rs).is_zero()) {
        vanish = false;
        bad = rel.str();
      }
    }
    add("relations_homogeneous", homog, bad);
    add("relations_vanish", vanish, bad);
  }

  // The unit monomial is the identity.
  {
    auto unit = sc.index_of(Monomial{});
    bool ok = unit.has_value();
    if (ok)
      for (size_t j = 0; j < nb && ok; ++j)
        ok = sc.products[*unit][j] == Polynomial(sc.basis[j], 1);
    add("identity", ok);
  }

  // Commutativity of the stored table.
  {
    bool ok = true;
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j) ok = sc.products[i][j] == sc.products[j][i];
    add("commutativity", ok);
  }

  // Exact associativity of all basis triples.
  {
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j)
        for (size_t k = 0; k < nb && ok; ++k) {
          Polynomial left = normal_form(sc.products[i][j] * Polynomial(sc.basis[k], 1), rs);
          Polynomial right = normal_form(Polynomial(sc.basis[i], 1) * sc.products[j][k], rs);
          if (!(left == right)) {
            ok = false;
            bad = "(" + sc.basis[i].str() + ", " + sc.basis[j].str() + ", " + sc.basis[k].str() + ")";
          }
        }
    add("associativity", ok, bad);
  }

  // Every term of every product has the degree of its factors.
  {
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j) {
        Rational expected = pres.grading.degree(sc.basis[i]) + pres.grading.degree(sc.basis[j]);
        for (const auto& [m, c] : sc.products[i][j].terms())
          if (pres.grading.degree(m) != expected) {
            ok = false;
            bad = sc.basis[i].str() + " * " + sc.basis[j].str();
            break;
          }
      }
    add("grading", ok, bad);
  }

  // Products of classes over the same point land on the label-sum sector.
  {
    bool ok = true;
    std::string bad;
    RewriteSystem rs0 = ring_rewrite_system(w, truncation, {.quantum = false, .zeta_factor = opts.zeta_factor});
    for (size_t i = 0; i < nb && ok; ++i) {
      for (size_t j = 0; j < nb && ok; ++j) {
        const Monomial& u = sc.basis[i];
        const Monomial& v = sc.basis[j];
        Polynomial prod = normal_form(Polynomial(u, 1) * Polynomial(v, 1), rs0);
        if (u.y == 0 && v.y == 0) {
          long expect = positive_mod(*over_zero_label(w, u) + *over_zero_label(w, v), w.a);
          for (const auto& [t, c] : prod.terms()) {
            auto lab = over_zero_label(w, t);
            if (!lab || *lab != expect) {
              ok = false;
              bad = u.str() + " * " + v.str() + " -> " + prod.str();
            }
          }
        }
        if (u.x == 0 && v.x == 0 && ok) {
          long expect = positive_mod(*over_inf_label(w, u) + *over_inf_label(w, v), w.b);
          for (const auto& [t, c] : prod.terms()) {
            auto lab = over_inf_label(w, t);
            if (!lab || *lab != expect) {
              ok = false;
              bad = u.str() + " * " + v.str() + " -> " + prod.str();
            }
          }
        }
      }
    }
    add("sector_additivity", ok, bad);
  }

  // Pairing: constructible, symmetric, dual-block structured.
  std::optional<PairingMatrix> pairing;
  try {
    pairing = pairing_matrix(sc);
    bool ok = true;
    std::string bad;
    BasisInfo info = basis_info(sc);
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j) {
        if (!(pairing->g[i][j] == pairing->g[j][i])) {
          ok = false;
          bad = "asymmetric";
        }
        if (!pairing->g[i][j].is_zero()) {
          auto [su, ku] = monomial_sector(w, sc.basis[i]);
          auto [sv, kv] = monomial_sector(w, sc.basis[j]);
          if (!(sv == involution_sector(w, su)) ||
              info.degree[i] + info.degree[j] != Rational(1)) {
            ok = false;
            bad = "block structure";
          }
        }
      }
    add("pairing", ok, bad);
  } catch (const std::exception& ex) {
    add("pairing", false, ex.what());
  }

  // Frobenius: g(u * v, w) totally symmetric.
  if (pairing) {
    bool ok = true;
    std::string bad;
    auto three_point = [&](size_t i, size_t j, size_t k) {
      Polynomial t;  // series in q
      for (const auto& [m, c] : sc.products[i][j].terms()) {
        Monomial base = m;
        base.q = 0;
        auto l = sc.index_of(base);
        if (!l) continue;
        if (pairing->g[*l][k].is_zero()) continue;
        t.add_term(Monomial{0, 0, 0, m.q}, c * pairing->g[*l][k]);
      }
      return t;
    };
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j)
        for (size_t k = j; k < nb && ok; ++k)
          if (!(three_point(i, j, k) == three_point(i, k, j))) {
            ok = false;
            bad = "(" + sc.basis[i].str() + ", " + sc.basis[j].str() + ", " + sc.basis[k].str() + ")";
          }
    add("frobenius", ok, bad);
  } else {
    add("frobenius", false, "pairing unavailable");
  }

  // q -> 0 recovers the classical table.
  {
    bool ok = true;
    StructureConstants sc0 = make_structure_constants_unchecked(
        w, truncation, {.quantum = false, .zeta_factor = opts.zeta_factor});
    for (size_t i = 0; i < nb && ok; ++i)
      for (size_t j = 0; j < nb && ok; ++j)
        ok = sc.products[i][j].at_q_zero() == sc0.products[i][j];
    add("classical_limit", ok);
  }

  return report;
}

std::vector<Rational> three_point_xy(const Weights& w) {
  unsigned truncation = 6;
  RewriteSystem rs = ring_rewrite_system(w, truncation, {});
  Polynomial xy = normal_form(Polynomial(Monomial{0, 1, 1, 0}, 1), rs);

  std::vector<Rational> from_presentation(size_t(w.d), Rational(0));
  for (const auto& [m, c] : xy.terms()) {
    if (m.q != 1 || m.x != 0 || m.y != 0 || m.zeta >= unsigned(w.d))
      throw std::runtime_error("three_point_xy: x*y is not q-linear in the zeta powers");
    from_presentation[m.zeta] = c;
  }

  if (w.d < w.a && w.d < w.b) {
    // Moduli route: the minimal-degree map exists and is unique iff the
    // congruence system has one solution with one section on each side.
    std::vector<PicClass> sols = solve_map_picard(w, 1, 1);
    bool unique_map = sols.size() == 1;
    if (unique_map) {
      const PicClass& L = sols[0];
      PicClass La{L.z0 * w.a, L.zinf * w.a, {}};
      PicClass Lb{L.z0 * w.b, L.zinf * w.b, {}};
      unique_map = h0_genus0(pic_canonical(La, w.a, w.b), w.a, w.b) == 1 &&
                   h0_genus0(pic_canonical(Lb, w.a, w.b), w.a, w.b) == 1;
    }
    std::vector<Rational> geometric(size_t(w.d), Rational(0));
    geometric[0] = unique_map ? Rational(1) : Rational(0);
    for (long D = 2; D <= w.d; ++D) {
      if (w.d % D != 0) continue;
      if (!solve_map_picard(w, 1, D).empty())
        throw std::runtime_error("three_point_xy: unexpected twisted minimal map with D = " +
                                 std::to_string(D));
    }
    if (geometric != from_presentation)
      throw std::runtime_error("three_point_xy: moduli count disagrees with presentation");
    return geometric;
  }
  return from_presentation;
}

bool tables_isomorphic(const StructureConstants& sc1, const StructureConstants& sc2) {
  const Weights& w1 = sc1.weights;
  const Weights& w2 = sc2.weights;
  if (w1.a != w2.a || w1.b != w2.b || sc1.truncation != sc2.truncation) return false;
  if ((w2.n - w1.n) % w1.A != 0) return false;
  long t = positive_mod((w2.n - w1.n) / w1.A, w1.d);

  auto relabel = [&](const Monomial& m) {
    Monomial r = m;
    r.zeta = unsigned(positive_mod(long(m.zeta) + t * long(m.x) - t * long(m.y), w1.d));
    return r;
  };

  RewriteSystem rs1 = ring_rewrite_system(w1, sc1.truncation, {});
  for (size_t i = 0; i < sc2.rank(); ++i) {
    for (size_t j = 0; j < sc2.rank(); ++j) {
      Polynomial lhs = sc2.products[i][j].map_monomials(relabel);
      Polynomial rhs = normal_form(Polynomial(relabel(sc2.basis[i]), 1) *
                                       Polynomial(relabel(sc2.basis[j]), 1),
                                   rs1);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace qchow
