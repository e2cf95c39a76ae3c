#include "qchow/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qchow {

std::string Monomial::str() const {
  std::string out;
  auto emit = [&out](const char* name, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit("zeta", zeta);
  emit("x", x);
  emit("y", y);
  emit("q", q);
  return out.empty() ? "1" : out;
}

void Polynomial::add_term(const Monomial& m, Rational c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Polynomial Polynomial::truncate_q(unsigned bound) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.q <= bound) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::at_q_zero() const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.q == 0) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::q_coefficient(unsigned power) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.q == power) {
      Monomial stripped = m;
      stripped.q = 0;
      r.add_term(stripped, c);
    }
  return r;
}

Polynomial Polynomial::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add_term(f(m), c);
  return r;
}

std::optional<Rational> Polynomial::homogeneous_degree(const Grading& g) const {
  std::optional<Rational> deg;
  for (const auto& [m, c] : terms_) {
    Rational d = g.degree(m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (a == Rational(1) && !m.is_unit()) {
      out += m.str();
    } else if (m.is_unit()) {
      out += a.str();
    } else {
      out += a.str() + "*" + m.str();
    }
  }
  return out;
}

namespace {

// One multiplicative factor of a term: a rational constant or name[^exp].
void apply_factor(std::string_view f, Rational& coeff, Monomial& mono) {
  if (f.empty()) throw std::invalid_argument("Polynomial: empty factor");
  if (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '-' || f[0] == '+') {
    coeff *= Rational::parse(f);
    return;
  }
  size_t caret = f.find('^');
  std::string_view name = f.substr(0, caret);
  unsigned exp = 1;
  if (caret != std::string_view::npos) {
    std::string es(f.substr(caret + 1));
    size_t pos = 0;
    int v = std::stoi(es, &pos);
    if (pos != es.size() || v < 0) throw std::invalid_argument("Polynomial: bad exponent '" + es + "'");
    exp = static_cast<unsigned>(v);
  }
  if (name == "zeta")
    mono.zeta += exp;
  else if (name == "x")
    mono.x += exp;
  else if (name == "y")
    mono.y += exp;
  else if (name == "q")
    mono.q += exp;
  else
    throw std::invalid_argument("Polynomial: unknown variable '" + std::string(name) + "'");
}

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view s) {
  Polynomial result;
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("Polynomial: empty input");
  size_t pos = 0;
  int pending_sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    pending_sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  while (pos < s.size()) {
    size_t next = pos;
    while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
    std::string_view term = trim(s.substr(pos, next - pos));
    if (term.empty()) throw std::invalid_argument("Polynomial: empty term");
    Rational coeff(pending_sign);
    Monomial mono;
    size_t fpos = 0;
    std::string tstr(term);
    while (fpos < tstr.size()) {
      size_t star = tstr.find('*', fpos);
      if (star == std::string::npos) star = tstr.size();
      apply_factor(trim(std::string_view(tstr).substr(fpos, star - fpos)), coeff, mono);
      fpos = star + 1;
    }
    result.add_term(mono, coeff);
    if (next < s.size()) pending_sign = s[next] == '-' ? -1 : 1;
    pos = next + 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace qchow
