#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace berncov {

// Every probability, correlation and matrix entry in this library is an
// exact rational. GMP keeps values canonical (lowest terms, positive
// denominator) after each operation, so equality tests are exact.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Renders q as "num/den" in lowest terms, e.g. "-1/4", "0/1", "3/1".
std::string format_fraction(const Rational& q);

/// Parses "num/den" fractions, plain integers ("3", "-12") and finite
/// decimals ("0.7" -> 7/10, "-.25" -> -1/4), all exactly. Scientific
/// notation is rejected: inputs take part in exact threshold comparisons,
/// so no rounding may happen at parse time.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace berncov
