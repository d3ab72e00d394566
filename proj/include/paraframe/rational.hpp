#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace paraframe {

using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Arbitrary-precision rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Renders as "n" for integers and "n/d" otherwise.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace paraframe
