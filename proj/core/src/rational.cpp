#include "dsrpm/rational.hpp"

#include <cmath>

namespace dsrpm {

std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

Rational floor_dyadic(long double x, int bits) {
    const long double scaled = std::floor(std::ldexp(x, bits));
    Integer num{static_cast<long long>(0)};
    // Split to stay exact beyond 64-bit range.
    long double hi = std::floor(scaled / 4294967296.0L);
    long double lo = scaled - hi * 4294967296.0L;
    num = Integer(static_cast<long long>(hi)) * Integer(4294967296LL) + Integer(static_cast<long long>(lo));
    return Rational{num, Integer{1} << bits};
}

}  // namespace dsrpm
