#pragma once

// Exact rational scalars. All series coefficients in the library are
// arbitrary-precision rationals kept in lowest terms; there is no floating
// point anywhere and equality of computed values is always exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "esvq/errors.hpp"

namespace esvq {

using Int      = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational; // always reduced

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw ConfigError("zero denominator");
    Int n(num), d(den);
    if (d < 0) {  // the underlying type requires a positive denominator
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

// n! as an exact integer-valued rational.
inline Rational factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// Renders "-3/2" style; integers render without the "/1".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Renders "num/den" with the denominator always present (JSON coefficient
// encoding: canonical and unambiguous, e.g. "3/1", "-1/2").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace esvq
