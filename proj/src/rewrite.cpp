#include "qchow/rewrite.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace qchow {

namespace {

std::tuple<long, unsigned, unsigned, unsigned> order_key(const Monomial& m, long wx, long wy) {
  return {wx * long(m.x) + wy * long(m.y), m.y, m.zeta, m.q};
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, unsigned q_truncation,
                             long weight_x, long weight_y)
    : rules_(std::move(rules)), q_truncation_(q_truncation),
      weight_x_(weight_x), weight_y_(weight_y) {
  if (weight_x_ <= 0 || weight_y_ <= 0)
    throw std::invalid_argument("RewriteSystem: weights must be positive");
  for (const auto& rule : rules_) {
    if (rule.pattern.is_unit())
      throw std::invalid_argument("RewriteSystem: unit pattern cannot decrease");
    for (const auto& [m, c] : rule.replacement.terms())
      if (!order_less(m, rule.pattern))
        throw std::invalid_argument("RewriteSystem: rule " + rule.pattern.str() + " -> " +
                                    rule.replacement.str() + " is not decreasing");
  }
}

bool RewriteSystem::order_less(const Monomial& a, const Monomial& b) const {
  return order_key(a, weight_x_, weight_y_) < order_key(b, weight_x_, weight_y_);
}

bool is_reducible(const Monomial& m, const RewriteSystem& rs) {
  for (const auto& rule : rs.rules())
    if (rule.pattern.divides(m)) return true;
  return false;
}

namespace {

// One reduction step in place.  The strategy picks which reducible
// (term, rule) pair to contract; returns false when p is in normal form.
template <typename Strategy>
bool reduce_step(Polynomial& p, const RewriteSystem& rs, Strategy&& pick) {
  std::vector<std::pair<Monomial, size_t>> candidates;
  for (const auto& [m, c] : p.terms()) {
    for (size_t r = 0; r < rs.rules().size(); ++r) {
      if (rs.rules()[r].pattern.divides(m)) {
        candidates.emplace_back(m, r);
        break;  // deterministic strategy wants the first rule; randomized re-rolls below
      }
    }
  }
  if (candidates.empty()) return false;
  auto [mono, rule_index] = pick(candidates);
  const RewriteRule& rule = rs.rules()[rule_index];
  Rational c = p.coefficient(mono);
  Monomial cofactor = mono / rule.pattern;
  p.add_term(mono, -c);
  Polynomial expansion = c * (Polynomial(cofactor, 1) * rule.replacement);
  p += expansion.truncate_q(rs.q_truncation());
  return true;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs) {
  Polynomial work = p.truncate_q(rs.q_truncation());
  auto first = [](const std::vector<std::pair<Monomial, size_t>>& cs) { return cs.front(); };
  while (reduce_step(work, rs, first)) {
  }
  return work;
}

namespace {

Polynomial normal_form_randomized(const Polynomial& p, const RewriteSystem& rs,
                                  std::mt19937_64& rng) {
  Polynomial work = p.truncate_q(rs.q_truncation());
  auto pick = [&rng, &rs](const std::vector<std::pair<Monomial, size_t>>& cs) {
    std::uniform_int_distribution<size_t> dist(0, cs.size() - 1);
    auto [mono, first_rule] = cs[dist(rng)];
    // the candidate list records only the first matching rule; re-roll among all matches
    std::vector<size_t> matching;
    for (size_t r = 0; r < rs.rules().size(); ++r)
      if (rs.rules()[r].pattern.divides(mono)) matching.push_back(r);
    std::uniform_int_distribution<size_t> rdist(0, matching.size() - 1);
    return std::make_pair(mono, matching[rdist(rng)]);
  };
  while (reduce_step(work, rs, pick)) {
  }
  return work;
}

Polynomial random_polynomial(std::mt19937_64& rng, unsigned q_bound) {
  std::uniform_int_distribution<int> nterms(1, 5);
  std::uniform_int_distribution<int> ez(0, 4);
  std::uniform_int_distribution<int> exy(0, 5);
  std::uniform_int_distribution<int> eq(0, int(q_bound > 2 ? 2 : q_bound));
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Polynomial p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int c = num(rng);
    if (c == 0) c = 1;
    Monomial m{unsigned(ez(rng)), unsigned(exy(rng)), unsigned(exy(rng)), unsigned(eq(rng))};
    p.add_term(m, Rational(c, den(rng)));
  }
  return p;
}

}  // namespace

std::vector<Monomial> enumerate_normal_monomials(const RewriteSystem& rs, unsigned zeta_bound) {
  // Pure power bounds come from pure-x / pure-y patterns.
  unsigned x_bound = 0, y_bound = 0;
  bool x_found = false, y_found = false;
  for (const auto& rule : rs.rules()) {
    const Monomial& p = rule.pattern;
    if (p.x > 0 && p.y == 0 && p.zeta == 0 && p.q == 0 && (!x_found || p.x < x_bound)) {
      x_bound = p.x;
      x_found = true;
    }
    if (p.y > 0 && p.x == 0 && p.zeta == 0 && p.q == 0 && (!y_found || p.y < y_bound)) {
      y_bound = p.y;
      y_found = true;
    }
  }
  if (!x_found || !y_found)
    throw std::domain_error("enumerate_normal_monomials: system does not bound pure powers");
  std::vector<Monomial> out;
  for (unsigned j = 0; j < x_bound; ++j)
    for (unsigned k = 0; k < y_bound; ++k)
      for (unsigned i = 0; i < zeta_bound; ++i) {
        Monomial m{i, j, k, 0};
        if (!is_reducible(m, rs)) out.push_back(m);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool confluence_smoke_check(const RewriteSystem& rs, unsigned samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("confluence_smoke_check: samples must be > 0");
  const auto& rules = rs.rules();
  // Critical overlaps: both one-step contractions of lcm(p_i, p_j) must agree.
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = i + 1; j < rules.size(); ++j) {
      Monomial m = lcm(rules[i].pattern, rules[j].pattern);
      Polynomial via_i = Polynomial(m / rules[i].pattern, 1) * rules[i].replacement;
      Polynomial via_j = Polynomial(m / rules[j].pattern, 1) * rules[j].replacement;
      if (!(normal_form(via_i, rs) == normal_form(via_j, rs))) return false;
    }
  }
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    Polynomial p = random_polynomial(rng, rs.q_truncation());
    Polynomial nf_det = normal_form(p, rs);
    Polynomial nf_rand = normal_form_randomized(p, rs, rng);
    if (!(nf_det == nf_rand)) return false;
  }
  return true;
}

}  // namespace qchow
