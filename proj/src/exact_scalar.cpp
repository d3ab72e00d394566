#include "paraframe/exact_scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace paraframe {

ExactScalar::ExactScalar(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

ExactScalar ExactScalar::variable(const std::string& name) {
  ExactScalar s;
  s.terms_.emplace(Monomial::variable(name), Rational(1));
  return s;
}

ExactScalar ExactScalar::term(const Rational& coeff, const Monomial& m) {
  ExactScalar s;
  if (coeff != 0) s.terms_.emplace(m, coeff);
  return s;
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational ExactScalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("ExactScalar is not a rational constant");
  return terms_.begin()->second;
}

int ExactScalar::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

std::set<std::string> ExactScalar::indeterminates() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.factors()) out.insert(name);
  return out;
}

void ExactScalar::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const {
  ExactScalar out = *this;
  out += rhs;
  return out;
}

ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const {
  ExactScalar out = *this;
  out -= rhs;
  return out;
}

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
  ExactScalar out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExactScalar ExactScalar::pow(unsigned exponent) const {
  ExactScalar out(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

ExactScalar ExactScalar::substituted(const std::map<std::string, Rational>& bindings) const {
  ExactScalar out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest = rest * Monomial::variable(name, e);
      } else {
        Rational p(1);
        for (int k = 0; k < e; ++k) p *= it->second;
        coeff *= p;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

std::optional<ExactScalar> ExactScalar::exact_quotient(const ExactScalar& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("exact_quotient: division by zero");
  ExactScalar quotient;
  ExactScalar remainder = *this;
  const auto [dm, dc] = divisor.leading_term();
  while (!remainder.is_zero()) {
    const auto [rm, rc] = remainder.leading_term();
    if (!dm.divides(rm)) return std::nullopt;
    ExactScalar t = ExactScalar::term(rc / dc, dm.quotient_of(rm));
    quotient += t;
    remainder -= t * divisor;
  }
  return quotient;
}

std::pair<Monomial, Rational> ExactScalar::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_coeff = (c == 1) && !m.is_unit();
    if (!unit_coeff) out << to_string(c);
    bool need_star = !unit_coeff;
    for (const auto& [name, e] : m.factors()) {
      if (need_star) out << "*";
      out << name;
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

ExactScalar substitute(const ExactScalar& s, const std::map<std::string, Rational>& bindings) {
  return s.substituted(bindings);
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace paraframe
