#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "paraframe/exact_scalar.hpp"

namespace paraframe {

/// Parses the polynomial text syntax used across files, CLI flags and reports:
/// terms joined by `+`/`-`, products with `*`, powers with `^`, parentheses
/// allowed, whitespace insignificant. Rational literals (`3/2`) and division
/// by a nonzero rational constant are accepted; any other division is an
/// error. When `allowed` is given, identifiers outside it are rejected.
ExactScalar parse_polynomial(std::string_view text,
                             const std::optional<std::set<std::string>>& allowed = std::nullopt);

}  // namespace paraframe
