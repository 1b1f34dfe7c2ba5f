#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace qk {

// k-th cyclotomic polynomial, by exact division of x^k - 1 by the product
// of all lower Phi_d with d | k.
inline QPoly cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k must be >= 1");
    std::vector<QPoly> phi(static_cast<std::size_t>(k) + 1);
    for (int n = 1; n <= k; ++n) {
        QPoly xn_minus_1(static_cast<std::size_t>(n) + 1, Rational(0));
        xn_minus_1[0] = -1;
        xn_minus_1[static_cast<std::size_t>(n)] = 1;
        QPoly divisor{Rational(1)};
        for (int d = 1; d < n; ++d)
            if (n % d == 0) divisor = poly_mul(divisor, phi[static_cast<std::size_t>(d)]);
        auto [q, r] = poly_divmod(xn_minus_1, divisor);
        if (!poly_is_zero(r)) throw std::logic_error("cyclotomic division not exact");
        phi[static_cast<std::size_t>(n)] = q;
    }
    return phi[static_cast<std::size_t>(k)];
}

inline int euler_phi(int k) {
    return static_cast<int>(poly_degree(cyclotomic_polynomial(k)));
}

// Extended Euclid in Q[x]: returns (g, s, t) with s*a + t*b = g, g monic.
inline void poly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0{Rational(1)}, s1{};
    QPoly t0{}, t1{Rational(1)};
    poly_trim(r0);
    poly_trim(r1);
    while (!poly_is_zero(r1)) {
        auto [q, r] = poly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        QPoly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    long d = poly_degree(r0);
    if (d < 0) throw std::invalid_argument("ext_gcd of zero polynomials");
    Rational lead = r0[static_cast<std::size_t>(d)];
    g = poly_scale(r0, 1 / lead);
    s = poly_scale(s0, 1 / lead);
    t = poly_scale(t0, 1 / lead);
}

// Element of Q(eta), eta a primitive k-th root of unity, represented as a
// polynomial in eta reduced modulo Phi_k.
class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1) {}

    static CyclotomicNumber from_rational(int order, const Rational& r) {
        CyclotomicNumber c(order);
        if (r != 0) c.coeffs_ = {r};
        return c;
    }

    // eta^e, any integer e (reduced mod order).
    static CyclotomicNumber root_power(int order, long e) {
        CyclotomicNumber c(order);
        long m = ((e % order) + order) % order;
        c.coeffs_ = poly_x_power(static_cast<std::size_t>(m));
        c.reduce();
        return c;
    }

    static CyclotomicNumber from_poly(int order, QPoly p) {
        CyclotomicNumber c(order);
        c.coeffs_ = std::move(p);
        c.reduce();
        return c;
    }

    int order() const { return order_; }
    const QPoly& coeffs() const { return coeffs_; }
    bool is_zero() const { return poly_is_zero(coeffs_); }

    bool operator==(const CyclotomicNumber& o) const {
        return order_ == o.order_ && poly_equal(coeffs_, o.coeffs_);
    }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const {
        check_order(o);
        return from_poly(order_, poly_add(coeffs_, o.coeffs_));
    }
    CyclotomicNumber operator-(const CyclotomicNumber& o) const {
        check_order(o);
        return from_poly(order_, poly_sub(coeffs_, o.coeffs_));
    }
    CyclotomicNumber operator*(const CyclotomicNumber& o) const {
        check_order(o);
        return from_poly(order_, poly_mul(coeffs_, o.coeffs_));
    }
    CyclotomicNumber operator*(const Rational& r) const {
        return from_poly(order_, poly_scale(coeffs_, r));
    }

    CyclotomicNumber inverse() const {
        if (is_zero()) throw std::domain_error("cyclotomic division by zero");
        QPoly g, s, t;
        poly_ext_gcd(coeffs_, modulus(), g, s, t);
        if (poly_degree(g) != 0)
            throw std::logic_error("element not invertible mod cyclotomic polynomial");
        return from_poly(order_, s);
    }

    CyclotomicNumber operator/(const CyclotomicNumber& o) const {
        check_order(o);
        return *this * o.inverse();
    }

private:
    explicit CyclotomicNumber(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    }

    QPoly modulus() const { return cyclotomic_polynomial(order_); }

    void reduce() {
        QPoly m = modulus();
        if (poly_degree(coeffs_) >= poly_degree(m)) coeffs_ = poly_divmod(coeffs_, m).second;
        poly_trim(coeffs_);
    }

    void check_order(const CyclotomicNumber& o) const {
        if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
    }

    int order_;
    QPoly coeffs_;
};

// Verifies (sum_{i=0}^{k-1} eta^{-il} x^i) * (eta^{-l} x - 1) = x^k - 1
// as an identity in Q(eta)[x].
inline bool check_root_sum_identity(int k, long l, int /*degree_bound*/ = 0) {
    if (k < 1) throw std::invalid_argument("check_root_sum_identity: k must be >= 1");
    std::vector<CyclotomicNumber> lhs_sum(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        lhs_sum[static_cast<std::size_t>(i)] = CyclotomicNumber::root_power(k, -static_cast<long>(i) * l);
    // multiply by (eta^{-l} x - 1)
    std::vector<CyclotomicNumber> lhs(static_cast<std::size_t>(k) + 1,
                                      CyclotomicNumber::from_rational(k, 0));
    CyclotomicNumber eml = CyclotomicNumber::root_power(k, -l);
    for (int i = 0; i < k; ++i) {
        lhs[static_cast<std::size_t>(i) + 1] =
            lhs[static_cast<std::size_t>(i) + 1] + lhs_sum[static_cast<std::size_t>(i)] * eml;
        lhs[static_cast<std::size_t>(i)] =
            lhs[static_cast<std::size_t>(i)] - lhs_sum[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= k; ++i) {
        Rational expect = (i == k) ? Rational(1) : (i == 0 ? Rational(-1) : Rational(0));
        if (!(lhs[static_cast<std::size_t>(i)] == CyclotomicNumber::from_rational(k, expect)))
            return false;
    }
    return true;
}

} // namespace qk
