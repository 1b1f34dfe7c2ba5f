#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qk {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
using QPoly = std::vector<Rational>;

inline void poly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long poly_degree(const QPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

inline bool poly_is_zero(const QPoly& p) { return poly_degree(p) < 0; }

inline bool poly_equal(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    poly_trim(x);
    poly_trim(y);
    return x == y;
}

inline QPoly poly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline QPoly poly_scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
    long db = poly_degree(b);
    if (db < 0) throw std::invalid_argument("polynomial division by zero");
    QPoly rem = a;
    poly_trim(rem);
    QPoly quot;
    long da = poly_degree(rem);
    if (da >= db) quot.assign(static_cast<std::size_t>(da - db + 1), Rational(0));
    while ((da = poly_degree(rem)) >= db) {
        Rational c = rem[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        quot[static_cast<std::size_t>(da - db)] = c;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
    }
    poly_trim(rem);
    poly_trim(quot);
    return {quot, rem};
}

inline QPoly poly_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = Rational(i) * p[i];
    poly_trim(r);
    return r;
}

// Antiderivative with zero constant term.
inline QPoly poly_integral(const QPoly& p) {
    QPoly r(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / Rational(i + 1);
    poly_trim(r);
    return r;
}

inline Rational poly_eval(const QPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline QPoly poly_x_power(std::size_t n) {
    QPoly r(n + 1, Rational(0));
    r[n] = 1;
    return r;
}

} // namespace qk
