#pragma once

// Exact rational arithmetic. Discharging weights and surviving rates are
// compared against thresholds that are tight, so no floating point is
// allowed anywhere near them.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fireline {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

// Canonical "p/q" form, q >= 1, gcd(p,q) = 1 (cpp_rational keeps it reduced).
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "' (want p/q)");
    }
}

inline double rational_double(const Rational& r) {
    return static_cast<double>(r);
}

} // namespace fireline
