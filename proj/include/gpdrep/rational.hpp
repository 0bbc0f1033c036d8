#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace gpdrep {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator. Expression templates are disabled so that the type behaves
/// like a plain value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" with decimal digits only. Returns false (and
/// leaves `out` untouched) on malformed text or a zero denominator.
bool parse_rational(std::string_view text, Rational& out);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string format_rational(const Rational& q);

}  // namespace gpdrep
