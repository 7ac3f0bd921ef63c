#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gsphere {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational make_rational(long long num, long long den = 1) { return Rational(num) / Rational(den); }

} // namespace gsphere
