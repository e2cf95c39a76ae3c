#pragma once

#include <cstdint>
#include <vector>

#include "qchow/polynomial.hpp"

namespace qchow {

struct RewriteRule {
  Monomial pattern;
  Polynomial replacement;
};

/// An ordered list of monomial rewrite rules with a q-adic truncation bound.
///
/// Termination is enforced at construction: every monomial of every
/// replacement must be strictly smaller than its pattern in the weighted
/// order below.  The order compares
///   (weight_x*e_x + weight_y*e_y,  e_y,  e_zeta,  e_q)
/// lexicographically; all four components are additive under monomial
/// multiplication, so one-step reduction shrinks any reducible polynomial.
/// For the weighted projective ring systems the weights are (B, A), which
/// orients all four relations; plain lexicographic orders do not.
class RewriteSystem {
public:
  RewriteSystem(std::vector<RewriteRule> rules, unsigned q_truncation,
                long weight_x = 1, long weight_y = 1);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  unsigned q_truncation() const { return q_truncation_; }
  long weight_x() const { return weight_x_; }
  long weight_y() const { return weight_y_; }

  /// Strict termination order described above.
  bool order_less(const Monomial& a, const Monomial& b) const;

private:
  std::vector<RewriteRule> rules_;
  unsigned q_truncation_;
  long weight_x_;
  long weight_y_;
};

bool is_reducible(const Monomial& m, const RewriteSystem& rs);

/// Reduce p to its unique normal form (unique when the system is confluent),
/// dropping terms with q-exponent above the truncation bound.
Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs);

/// All irreducible monomials with e_q = 0 and e_zeta < zeta_bound, in
/// canonical order.  Requires the system to bound pure x- and y-powers.
std::vector<Monomial> enumerate_normal_monomials(const RewriteSystem& rs, unsigned zeta_bound);

/// Local-confluence test: resolves every critical overlap between rule
/// patterns, and reduces `samples` seeded random polynomials under both the
/// deterministic and a randomized strategy, requiring equal normal forms.
bool confluence_smoke_check(const RewriteSystem& rs, unsigned samples, std::uint64_t seed);

}  // namespace qchow
