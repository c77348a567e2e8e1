#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsrpm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational{num, den}; }

/// "p/q" or "p" for integral values.
std::string to_string(const Rational& r);

long double to_long_double(const Rational& r);

/// Nearest-below dyadic rational with `bits` fractional bits.
Rational floor_dyadic(long double x, int bits = 60);

}  // namespace dsrpm
