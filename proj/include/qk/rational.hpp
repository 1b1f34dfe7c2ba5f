#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qk {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (canonicalized by the backend on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(p, q);
}

inline BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

// Generalized binomial coefficient C(n, k); n may be negative.
inline Rational binomial(long n, long k) {
    if (k < 0) return 0;
    Rational num = 1;
    for (long j = 0; j < k; ++j) num *= Rational(n - j);
    return num / Rational(factorial(k));
}

} // namespace qk
