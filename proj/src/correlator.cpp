#include "qchow/correlator.hpp"

#include <algorithm>
#include <stdexcept>

#include "qchow/picard.hpp"

namespace qchow {

CorrelatorKey CorrelatorKey::make(long beta, std::vector<Insertion> insertions) {
  if (beta < 0) throw std::invalid_argument("CorrelatorKey: beta must be >= 0");
  if (beta == 0 && insertions.size() < 3)
    throw std::invalid_argument("CorrelatorKey: unstable range beta = 0, n < 3");
  CorrelatorKey k;
  k.beta = beta;
  k.insertions = std::move(insertions);
  std::sort(k.insertions.begin(), k.insertions.end());
  return k;
}

bool CorrelatorKey::descendant_free() const {
  for (const auto& ins : insertions)
    if (ins.tau > 0) return false;
  return true;
}

std::string CorrelatorKey::str() const {
  std::string out = "<";
  for (size_t i = 0; i < insertions.size(); ++i) {
    if (i) out += ", ";
    if (insertions[i].tau > 0) out += "tau" + std::to_string(insertions[i].tau) + "(";
    out += insertions[i].cls.str();
    if (insertions[i].tau > 0) out += ")";
  }
  out += ">_" + std::to_string(beta);
  return out;
}

void CorrelatorTable::set(const CorrelatorKey& key, Rational value, Provenance provenance) {
  entries_[key] = TableEntry{std::move(value), provenance};
}

std::optional<Rational> CorrelatorTable::value(const CorrelatorKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

namespace {

// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("invert: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational lead = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RingContext RingContext::make(const Weights& w, unsigned truncation) {
  RingContext ctx;
  ctx.w_ = w;
  ctx.sc_ = structure_constants(w, truncation);
  ctx.pairing_ = pairing_matrix(ctx.sc_);
  ctx.basis_ = stringy_basis(w);

  size_t nb = ctx.basis_.size();
  if (nb != ctx.sc_.rank())
    throw std::runtime_error("RingContext: basis size mismatch");

  std::map<BasisClass, size_t> class_index;
  for (size_t i = 0; i < nb; ++i) class_index[ctx.basis_[i]] = i;

  ctx.mono_to_basis_.assign(nb, 0);
  ctx.basis_to_mono_.assign(nb, 0);
  ctx.mono_scale_.assign(nb, Rational(1));
  for (size_t mi = 0; mi < nb; ++mi) {
    auto [sector, kind] = monomial_sector(w, ctx.sc_.basis[mi]);
    BasisClass cls{sector, kind,
                   kind == ClassKind::Point ? Rational(1) : age(w, sector)};
    auto it = class_index.find(cls);
    if (it == class_index.end())
      throw std::runtime_error("RingContext: monomial sector misses the stringy basis");
    ctx.mono_to_basis_[mi] = it->second;
    ctx.basis_to_mono_[it->second] = mi;
    // point monomial zeta^i x^A = (d/a) * point class of its sector
    ctx.mono_scale_[mi] = kind == ClassKind::Point ? Rational(w.d, w.a) : Rational(1);
  }

  // Transport the monomial pairing to the class basis.
  ctx.gram_.assign(nb, std::vector<Rational>(nb, Rational(0)));
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j) {
      Rational v = ctx.pairing_.g[i][j] / (ctx.mono_scale_[i] * ctx.mono_scale_[j]);
      ctx.gram_[ctx.mono_to_basis_[i]][ctx.mono_to_basis_[j]] = v;
    }
  ctx.gram_inv_ = invert(ctx.gram_);
  return ctx;
}

size_t RingContext::basis_index(const BasisClass& cls) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == cls) return i;
  throw std::invalid_argument("RingContext: unknown basis class " + cls.str());
}

BasisClass RingContext::identity() const {
  return BasisClass{Sector{SectorType::OneDim, 0}, ClassKind::Fundamental, Rational(0)};
}

BasisClass RingContext::hyperplane() const {
  return BasisClass{Sector{SectorType::OneDim, 0}, ClassKind::Point, Rational(1)};
}

std::vector<std::pair<Rational, BasisClass>> RingContext::classical_product(
    const BasisClass& u, const BasisClass& v) const {
  size_t mu = basis_to_mono_[basis_index(u)];
  size_t mv = basis_to_mono_[basis_index(v)];
  // basis class = monomial / scale
  Rational prefactor = Rational(1) / (mono_scale_[mu] * mono_scale_[mv]);
  std::vector<std::pair<Rational, BasisClass>> out;
  const Polynomial& prod = sc_.products[mu][mv];
  for (const auto& [m, c] : prod.terms()) {
    if (m.q != 0) continue;
    auto k = sc_.index_of(m);
    if (!k) throw std::runtime_error("classical_product: non-normal product term");
    out.emplace_back(prefactor * c * mono_scale_[*k], basis_[mono_to_basis_[*k]]);
  }
  return out;
}

Rational RingContext::three_point(const BasisClass& u, const BasisClass& v, const BasisClass& w,
                                  long beta) const {
  size_t mu = basis_to_mono_[basis_index(u)];
  size_t mv = basis_to_mono_[basis_index(v)];
  size_t mw = basis_to_mono_[basis_index(w)];
  // <u, v, w>_beta = sum_l c_{uv}^l(q^beta) g(l, w), rescaled from monomials.
  Rational total(0);
  for (const auto& [m, c] : sc_.products[mu][mv].terms()) {
    if (m.q != unsigned(beta)) continue;
    Monomial base = m;
    base.q = 0;
    auto l = sc_.index_of(base);
    if (!l) throw std::runtime_error("three_point: non-normal product term");
    total += c * pairing_.g[*l][mw];
  }
  Rational scale = mono_scale_[mu] * mono_scale_[mv] * mono_scale_[mw];
  return total / scale;
}

CorrelatorTable seed_from_ring(const RingContext& ctx) {
  CorrelatorTable table;
  const auto& basis = ctx.basis();
  size_t nb = basis.size();
  long max_beta = long(ctx.constants().truncation);
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i; j < nb; ++j)
      for (size_t k = j; k < nb; ++k)
        for (long beta = 0; beta <= max_beta; ++beta) {
          Rational v = ctx.three_point(basis[i], basis[j], basis[k], beta);
          CorrelatorKey key = CorrelatorKey::make(
              beta, {Insertion{basis[i], 0}, Insertion{basis[j], 0}, Insertion{basis[k], 0}});
          table.set(key, v, Provenance::Seeded);
        }
  return table;
}

namespace {

bool is_identity_class(const BasisClass& cls) {
  return cls.kind == ClassKind::Fundamental && cls.sector.type == SectorType::OneDim &&
         cls.sector.label == 0;
}

void require_stable(long beta, size_t n, const char* op) {
  if (beta == 0 && n < 3)
    throw std::domain_error(std::string(op) + ": reduction leaves the stable range");
}

}  // namespace

KeyExpansion string_reduce(const CorrelatorKey& key) {
  auto it = std::find_if(key.insertions.begin(), key.insertions.end(), [](const Insertion& ins) {
    return ins.tau == 0 && is_identity_class(ins.cls);
  });
  if (it == key.insertions.end())
    throw std::invalid_argument("string_reduce: key has no tau_0(1) insertion");
  std::vector<Insertion> rest(key.insertions.begin(), it);
  rest.insert(rest.end(), std::next(it), key.insertions.end());
  require_stable(key.beta, rest.size(), "string_reduce");

  KeyExpansion out;
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i].tau == 0) continue;  // tau_{-1} terms vanish
    std::vector<Insertion> reduced = rest;
    --reduced[i].tau;
    out.push_back({Rational(1), CorrelatorKey::make(key.beta, std::move(reduced))});
  }
  return out;
}

std::pair<long, CorrelatorKey> dilaton_reduce(const CorrelatorKey& key) {
  auto it = std::find_if(key.insertions.begin(), key.insertions.end(), [](const Insertion& ins) {
    return ins.tau == 1 && is_identity_class(ins.cls);
  });
  if (it == key.insertions.end())
    throw std::invalid_argument("dilaton_reduce: key has no tau_1(1) insertion");
  std::vector<Insertion> rest(key.insertions.begin(), it);
  rest.insert(rest.end(), std::next(it), key.insertions.end());
  require_stable(key.beta, rest.size(), "dilaton_reduce");
  long factor = long(rest.size()) - 2;  // 2g - 2 + n at genus 0
  return {factor, CorrelatorKey::make(key.beta, std::move(rest))};
}

KeyExpansion divisor_reduce(const CorrelatorKey& key, const BasisClass& h,
                            const RingContext& ctx) {
  if (!(h == ctx.hyperplane()))
    throw std::invalid_argument(
        "divisor_reduce: the divisor equation only applies to the coarse hyperplane class");
  auto it = std::find_if(key.insertions.begin(), key.insertions.end(),
                         [&h](const Insertion& ins) { return ins.tau == 0 && ins.cls == h; });
  if (it == key.insertions.end())
    throw std::invalid_argument("divisor_reduce: key has no tau_0(h) insertion");
  std::vector<Insertion> rest(key.insertions.begin(), it);
  rest.insert(rest.end(), std::next(it), key.insertions.end());
  require_stable(key.beta, rest.size(), "divisor_reduce");

  KeyExpansion out;
  // integral of h over beta * (minimal class) is beta by normalization
  out.push_back({Rational(key.beta), CorrelatorKey::make(key.beta, rest)});
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i].tau == 0) continue;
    for (const auto& [coeff, cls] : ctx.classical_product(rest[i].cls, h)) {
      std::vector<Insertion> reduced = rest;
      --reduced[i].tau;
      reduced[i].cls = cls;
      out.push_back({coeff, CorrelatorKey::make(key.beta, std::move(reduced))});
    }
  }
  return out;
}

namespace {

// One side of the WDVV exchange: sum over beta splits, distributions of the
// extra insertions, and the dual basis pair.
std::optional<Rational> wdvv_side(const CorrelatorTable& table, const BasisClass& g1,
                                  const BasisClass& g2, const BasisClass& g3,
                                  const BasisClass& g4, const std::vector<BasisClass>& extras,
                                  long beta, const RingContext& ctx,
                                  std::vector<CorrelatorKey>& missing) {
  const auto& basis = ctx.basis();
  const auto& ginv = ctx.gram_inverse();
  size_t nb = basis.size();
  Rational total(0);
  bool complete = true;
  size_t nsplit = size_t(1) << extras.size();
  for (long b1 = 0; b1 <= beta; ++b1) {
    long b2 = beta - b1;
    for (size_t mask = 0; mask < nsplit; ++mask) {
      std::vector<Insertion> left_base, right_base;
      for (size_t e = 0; e < extras.size(); ++e)
        (mask & (size_t(1) << e) ? left_base : right_base).push_back(Insertion{extras[e], 0});
      for (size_t i = 0; i < nb; ++i) {
        for (size_t j = 0; j < nb; ++j) {
          if (ginv[i][j].is_zero()) continue;
          std::vector<Insertion> left = left_base;
          left.push_back({g1, 0});
          left.push_back({g2, 0});
          left.push_back({basis[i], 0});
          std::vector<Insertion> right = right_base;
          right.push_back({basis[j], 0});
          right.push_back({g3, 0});
          right.push_back({g4, 0});
          CorrelatorKey kl = CorrelatorKey::make(b1, std::move(left));
          CorrelatorKey kr = CorrelatorKey::make(b2, std::move(right));
          auto vl = table.value(kl);
          auto vr = table.value(kr);
          if (!vl) {
            missing.push_back(kl);
            complete = false;
          }
          if (!vr) {
            missing.push_back(kr);
            complete = false;
          }
          if (vl && vr && complete) total += *vl * ginv[i][j] * *vr;
        }
      }
    }
  }
  if (!complete) return std::nullopt;
  return total;
}

}  // namespace

WdvvResult wdvv_residual(const CorrelatorTable& table, const std::array<BasisClass, 4>& four,
                         const std::vector<BasisClass>& extras, long beta,
                         const RingContext& ctx) {
  WdvvResult result;
  auto lhs = wdvv_side(table, four[0], four[1], four[2], four[3], extras, beta, ctx,
                       result.missing);
  auto rhs = wdvv_side(table, four[0], four[2], four[1], four[3], extras, beta, ctx,
                       result.missing);
  if (!lhs || !rhs) {
    std::sort(result.missing.begin(), result.missing.end());
    result.missing.erase(std::unique(result.missing.begin(), result.missing.end()),
                         result.missing.end());
    return result;
  }
  result.residual = *lhs - *rhs;
  return result;
}

CorrelatorTable p1_reconstruct(long max_beta, long max_insertions) {
  if (max_beta < 1) throw std::invalid_argument("p1_reconstruct: max_beta must be >= 1");
  if (max_insertions < 3) throw std::invalid_argument("p1_reconstruct: need max_insertions >= 3");
  RingContext ctx = RingContext::make(Weights::make(1, 1), unsigned(max_beta));
  BasisClass one = ctx.identity();
  BasisClass pt = ctx.hyperplane();

  CorrelatorTable table;
  // Seeds: the classical three-point values and <pt,pt,pt>_{0,1} = 1.
  for (long s = 0; s <= 3; ++s) {
    std::vector<Insertion> ins;
    for (long i = 0; i < s; ++i) ins.push_back({one, 0});
    for (long i = s; i < 3; ++i) ins.push_back({pt, 0});
    table.set(CorrelatorKey::make(0, ins), ctx.three_point(s >= 1 ? one : pt, s >= 2 ? one : pt,
                                                           s >= 3 ? one : pt, 0),
              Provenance::Seeded);
  }
  table.set(CorrelatorKey::make(1, {{pt, 0}, {pt, 0}, {pt, 0}}), ctx.three_point(pt, pt, pt, 1),
            Provenance::Seeded);

  auto key_of = [&](long beta, long n_ones, long n_pts) {
    std::vector<Insertion> ins;
    for (long i = 0; i < n_ones; ++i) ins.push_back({one, 0});
    for (long i = 0; i < n_pts; ++i) ins.push_back({pt, 0});
    return CorrelatorKey::make(beta, std::move(ins));
  };

  for (long beta = 0; beta <= max_beta; ++beta) {
    for (long n = 2; n <= max_insertions; ++n) {
      if (beta == 0 && n < 3) continue;
      for (long ones = 0; ones <= n; ++ones) {
        long pts = n - ones;
        CorrelatorKey key = key_of(beta, ones, pts);
        if (table.contains(key)) continue;
        Rational value(0);
        if (ones > 0) {
          // string equation: every descendant power is zero
          value = Rational(0);
        } else {
          // point insertions only: the invariant vanishes unless the
          // degree sum n matches the virtual dimension 2*beta + n - 2
          MapSpec spec{Weights::make(1, 1),
                       Football{0, std::vector<long>(size_t(n), 1)},
                       beta,
                       std::vector<Sector>(size_t(n), Sector{SectorType::OneDim, 0})};
          Rational vdim = virtual_dim(spec);
          if (Rational(n) != vdim) {
            value = Rational(0);
          } else if (n == 2) {
            // inverse divisor step from the three-point seed
            auto seed = table.value(key_of(beta, 0, 3));
            if (!seed) throw std::logic_error("p1_reconstruct: missing three-point value");
            value = *seed / Rational(beta);
          } else {
            auto prev = table.value(key_of(beta, 0, n - 1));
            if (!prev) throw std::logic_error("p1_reconstruct: missing divisor predecessor");
            value = Rational(beta) * *prev;
          }
        }
        table.set(key, value, Provenance::Recursion);
      }
    }
  }
  return table;
}

}  // namespace qchow
