#include "paraframe/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace paraframe {

namespace {

int variable_rank(std::string_view name) {
  if (name == "alpha") return 0;
  if (name == "beta") return 1;
  return 2;
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  const int ra = variable_rank(a);
  const int rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

Monomial Monomial::variable(std::string name, int exponent) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be non-negative");
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto it = factors_.begin();
  auto jt = other.factors_.begin();
  while (it != factors_.end() || jt != other.factors_.end()) {
    if (jt == other.factors_.end() || (it != factors_.end() && variable_less(it->first, jt->first))) {
      out.factors_.push_back(*it++);
    } else if (it == factors_.end() || variable_less(jt->first, it->first)) {
      out.factors_.push_back(*jt++);
    } else {
      out.factors_.emplace_back(it->first, it->second + jt->second);
      ++it, ++jt;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [name, e] : factors_)
    if (other.exponent(name) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial out;
  for (const auto& [name, e] : other.factors_) {
    const int r = e - exponent(name);
    if (r > 0) out.factors_.emplace_back(name, r);
  }
  return out;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // Walk the union of variables from the largest to the smallest; the first
  // variable where the exponents differ decides.
  auto it = a.factors().rbegin();
  auto jt = b.factors().rbegin();
  while (it != a.factors().rend() || jt != b.factors().rend()) {
    if (jt == b.factors().rend()) return false;  // a has a larger variable
    if (it == a.factors().rend()) return true;
    if (it->first != jt->first) return variable_less(it->first, jt->first);
    if (it->second != jt->second) return it->second < jt->second;
    ++it, ++jt;
  }
  return false;
}

}  // namespace paraframe
