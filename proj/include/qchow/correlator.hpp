#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchow/inertia.hpp"
#include "qchow/quantum.hpp"

namespace qchow {

/// A class insertion tau_k(cls) in a genus-0 correlator.
struct Insertion {
  BasisClass cls;
  unsigned tau = 0;

  friend bool operator==(const Insertion& a, const Insertion& b) {
    return a.cls == b.cls && a.tau == b.tau;
  }
  friend auto operator<=>(const Insertion& a, const Insertion& b) {
    if (auto c = a.cls <=> b.cls; c != 0) return c;
    return a.tau <=> b.tau;
  }
};

/// Canonical (sorted) genus-0 correlator index <...>_{0, beta}, with beta in
/// multiples of the minimal effective class d*[fundamental].  Keys with
/// beta = 0 and fewer than three insertions are excluded.
struct CorrelatorKey {
  long beta = 0;
  std::vector<Insertion> insertions;

  static CorrelatorKey make(long beta, std::vector<Insertion> insertions);

  size_t size() const { return insertions.size(); }
  bool descendant_free() const;

  friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
  friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;

  std::string str() const;
};

enum class Provenance { Seeded, Recursion, User };

struct TableEntry {
  Rational value;
  Provenance provenance = Provenance::User;
};

/// Immutable-by-convention store of computed invariants.
class CorrelatorTable {
public:
  void set(const CorrelatorKey& key, Rational value, Provenance provenance);
  std::optional<Rational> value(const CorrelatorKey& key) const;
  bool contains(const CorrelatorKey& key) const { return entries_.count(key) > 0; }
  const std::map<CorrelatorKey, TableEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

private:
  std::map<CorrelatorKey, TableEntry> entries_;
};

struct KeyTerm {
  Rational coeff;
  CorrelatorKey key;
};
using KeyExpansion = std::vector<KeyTerm>;

/// Ring data shared by the correlator operations: the stringy basis, the
/// basis-class pairing with its inverse, and classical products expanded in
/// basis classes.  Point-class basis elements relate to the ring's point
/// monomials by the factor d/a, which the constructor absorbs.
class RingContext {
public:
  static RingContext make(const Weights& w, unsigned truncation);

  const Weights& weights() const { return w_; }
  const StructureConstants& constants() const { return sc_; }
  const std::vector<BasisClass>& basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  const std::vector<std::vector<Rational>>& gram_inverse() const { return gram_inv_; }

  size_t basis_index(const BasisClass& cls) const;
  BasisClass identity() const;
  /// The coarse hyperplane class: the point class on the identity sector,
  /// normalized so it integrates to 1 against the generator of N(X).
  BasisClass hyperplane() const;

  /// Classical product expanded over the stringy basis.
  std::vector<std::pair<Rational, BasisClass>> classical_product(const BasisClass& u,
                                                                 const BasisClass& v) const;

  /// Three-point invariant <u, v, w>_{0, beta} from the structure constants.
  Rational three_point(const BasisClass& u, const BasisClass& v, const BasisClass& w,
                       long beta) const;

private:
  Weights w_;
  StructureConstants sc_;
  PairingMatrix pairing_;
  std::vector<BasisClass> basis_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<Rational>> gram_inv_;
  std::vector<size_t> mono_to_basis_;   // basis monomial index -> basis class index
  std::vector<size_t> basis_to_mono_;
  std::vector<Rational> mono_scale_;    // monomial = scale * basis class
};

/// All three-point descendant-free invariants up to the ring truncation.
CorrelatorTable seed_from_ring(const RingContext& ctx);

/// String equation: removes one tau_0(1) insertion and decrements each
/// remaining descendant power (tau_{-1} terms drop).
KeyExpansion string_reduce(const CorrelatorKey& key);

/// Dilaton equation: removes one tau_1(1); the factor is 2g - 2 + n = n - 2.
std::pair<long, CorrelatorKey> dilaton_reduce(const CorrelatorKey& key);

/// Divisor equation for the coarse hyperplane h: removes one tau_0(h)
/// insertion, yielding (integral of h over beta) * reduced key plus the
/// descendant correction terms with classes cupped by h.  Only the untwisted
/// divisor class is admissible.
KeyExpansion divisor_reduce(const CorrelatorKey& key, const BasisClass& h, const RingContext& ctx);

struct WdvvResult {
  std::optional<Rational> residual;
  std::vector<CorrelatorKey> missing;
};

/// Left minus right side of the four-point WDVV exchange relation for
/// gamma = (g1, g2, g3, g4) with the extra insertions distributed over both
/// factors and beta split between them.  All classes here are even, so every
/// sign is +1.  Reports the missing table entries instead of a residual if
/// any required invariant is absent.
WdvvResult wdvv_residual(const CorrelatorTable& table, const std::array<BasisClass, 4>& four,
                         const std::vector<BasisClass>& extras, long beta,
                         const RingContext& ctx);

/// Full descendant-free genus-0 table of P(1,1) up to max_beta and max_n
/// insertions, generated from the single seed <pt,pt,pt>_{0,1} = 1 by the
/// string and divisor equations plus virtual-dimension bookkeeping.
CorrelatorTable p1_reconstruct(long max_beta, long max_insertions = 6);

}  // namespace qchow
