#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paraframe {

/// Power product of named indeterminates, e.g. alpha^2*beta.
///
/// Factors are kept sorted by the canonical variable order (alpha, beta, then
/// every other name alphabetically) and never carry a zero exponent, so equal
/// monomials compare equal structurally.
class Monomial {
 public:
  using Factor = std::pair<std::string, int>;

  Monomial() = default;
  static Monomial variable(std::string name, int exponent = 1);

  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  int exponent(std::string_view name) const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Quotient other/this of the exponent vectors. Pre: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Canonical variable order: alpha < beta < remaining names alphabetically.
bool variable_less(std::string_view a, std::string_view b);

/// Graded lexicographic order. Total degree decides first; ties are broken by
/// the exponent of the largest variable in which the monomials differ.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

}  // namespace paraframe
