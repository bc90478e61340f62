#pragma once

// Exact scalar types. Everything in hochkit is computed over the rationals.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace hochkit {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "n" or "n/d" form (reduced, positive denominator).
std::string to_string(const Rational& q);

inline Rational sign_of(long long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

inline int parity_sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace hochkit
