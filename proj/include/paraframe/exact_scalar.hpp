#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paraframe/monomial.hpp"
#include "paraframe/rational.hpp"

namespace paraframe {

/// Exact multivariate polynomial with rational coefficients: the universal
/// scalar of the workbench. Values are immutable in spirit (all operations
/// return fresh values) and always in canonical form: no zero coefficient is
/// ever stored and terms are kept in the graded-lexicographic order.
class ExactScalar {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  ExactScalar() = default;  // zero
  ExactScalar(int value) : ExactScalar(Rational(value)) {}
  ExactScalar(const Rational& value);
  static ExactScalar variable(const std::string& name);
  static ExactScalar term(const Rational& coeff, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Pre: is_rational().
  Rational rational_value() const;
  int total_degree() const;  // -1 for the zero polynomial

  std::set<std::string> indeterminates() const;

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar operator+(const ExactScalar& rhs) const;
  ExactScalar operator-(const ExactScalar& rhs) const;
  ExactScalar operator*(const ExactScalar& rhs) const;
  ExactScalar operator-() const;
  ExactScalar pow(unsigned exponent) const;

  bool operator==(const ExactScalar& rhs) const = default;

  /// Partial evaluation; indeterminates absent from the value are bound
  /// trivially, unbound ones survive.
  ExactScalar substituted(const std::map<std::string, Rational>& bindings) const;

  /// Exact polynomial quotient *this / divisor, or nullopt when the division
  /// does not come out even. Division by zero is invalid.
  std::optional<ExactScalar> exact_quotient(const ExactScalar& divisor) const;

  /// Leading (largest) term under the monomial order. Pre: !is_zero().
  std::pair<Monomial, Rational> leading_term() const;

  const TermMap& terms() const { return terms_; }

  /// Canonical text: terms in descending order, e.g. "2*beta^2 - alpha - 1".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

inline ExactScalar operator*(const Rational& c, const ExactScalar& s) { return ExactScalar(c) * s; }
inline ExactScalar operator*(int c, const ExactScalar& s) { return ExactScalar(c) * s; }

/// Module-level names mirroring the published operation surface.
ExactScalar substitute(const ExactScalar& s, const std::map<std::string, Rational>& bindings);

}  // namespace paraframe
