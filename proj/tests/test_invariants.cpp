#include <doctest.h>

#include "qk/invariants.hpp"

using namespace qk;

TEST_CASE("Euler characteristics of line bundles on projective space") {
    for (int N = 1; N <= 6; ++N) CHECK(euler_char_power(N, 0, {}) == Rational(1));
    // chi(P^N, O(k)) = C(N+k, N) as a polynomial identity in k; the class
    // P^a corresponds to k = -a
    for (int N = 1; N <= 4; ++N)
        for (int a = -3; a <= N + 3; ++a)
            CHECK(euler_char_power(N, a, {}) == binomial(N - a, N));
    // Serre duality instance: chi(P^2, O(-3)) = chi(P^2, O)
    CHECK(euler_char_power(2, 3, {}) == Rational(1));
}

TEST_CASE("Euler characteristics of complete intersection structure sheaves") {
    // plane quintic curve has genus 6
    CHECK(euler_char_power(2, 0, {5}) == Rational(-5));
    // elliptic cubic
    CHECK(euler_char_power(2, 0, {3}) == Rational(0));
    // quintic threefold is Calabi-Yau: chi(O) = 0
    CHECK(euler_char_power(4, 0, {5}) == Rational(0));
    // intersection of two quadrics in P^5 is Fano
    CHECK(euler_char_power(5, 0, {2, 2}) == Rational(1));
    // (2,2,2) in P^5 is a K3 surface: chi(O) = 2
    CHECK(euler_char_power(5, 0, {2, 2, 2}) == Rational(2));
}

TEST_CASE("euler_char on ring elements agrees and is linear") {
    RingSpec spec{{3}};
    RingElement P = RingElement::gen_P(spec, 0);
    RingElement one = RingElement::one(spec);
    CHECK(euler_char(2, one, {}) == euler_char_power(2, 0, {}));
    CHECK(euler_char(2, P, {}) == euler_char_power(2, 1, {}));
    CHECK(euler_char(2, P * P, {3}) == euler_char_power(2, 2, {3}));
    RingElement mix = one * Rational(2) - P * Rational(7);
    CHECK(euler_char(2, mix, {}) ==
          Rational(2) * euler_char_power(2, 0, {}) - Rational(7) * euler_char_power(2, 1, {}));
}

TEST_CASE("u-Laurent expansion bookkeeping") {
    // 1/((1-P)^2 P) = u^{-2} + u^{-1} + 1 + u + ... near u = 0
    std::vector<UFactor> fs;
    fs.push_back(uf_one_minus_p_pow(1, -2));
    fs.push_back(uf_power_p(-1));
    ULaurent e = expand_in_u(fs, 2);
    for (int k = -2; k <= 2; ++k)
        CHECK(qf_equal(e.coeff(k), QFunction::scalar(point_spec(), 1)));
    // (1 - P^3) = 3u - 3u^2 + u^3
    ULaurent c = expand_in_u({uf_one_minus_p_pow(3, 1)}, 3);
    CHECK(qf_equal(c.coeff(1), QFunction::scalar(point_spec(), 3)));
    CHECK(qf_equal(c.coeff(2), QFunction::scalar(point_spec(), -3)));
    CHECK(qf_equal(c.coeff(3), QFunction::scalar(point_spec(), 1)));
}

TEST_CASE("quintic one-point invariants at degree one") {
    OnePointResult r = one_point_degree_one(4, {5});
    REQUIRE(r.dim == 3);
    REQUIRE(r.invariants.size() == 4);
    RingSpec pt = point_spec();
    // <1> = 2875 (1 - 3q) / (1-q)^2
    Laurent n{{0, RingElement::constant(pt, 2875)}, {1, RingElement::constant(pt, -8625)}};
    QFunction expect = QFunction::from_laurent(pt, n);
    expect.push_den(DenFactor{RingElement::one(pt), 1, 2});
    CHECK(qf_equal(r.invariants[0], expect));
    CHECK(qf_eval_q0(r.invariants[0]).scalar_part() == Rational(2875));
    for (const QFunction& inv : r.invariants) CHECK(invariant_in_k_minus(inv));
}

TEST_CASE("intersection of two quadrics in P^5") {
    OnePointResult r = one_point_degree_one(5, {2, 2});
    REQUIRE(r.dim == 3);
    RingSpec pt = point_spec();
    // <1> = 32 (q^2 + q^3) / (1-q)^4
    Laurent n{{2, RingElement::constant(pt, 32)}, {3, RingElement::constant(pt, 32)}};
    QFunction expect = QFunction::from_laurent(pt, n);
    expect.push_den(DenFactor{RingElement::one(pt), 1, 4});
    CHECK(qf_equal(r.invariants[0], expect));
    CHECK(qf_eval_q0(r.invariants[0]).scalar_part() == Rational(0));
    for (const QFunction& inv : r.invariants) CHECK(invariant_in_k_minus(inv));
}

TEST_CASE("Gram matrices of the twisted pairing") {
    RatMatrix g = gram_matrix(4, {5}, 3);
    RatMatrix ginv = rat_matrix_inverse(g);
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < n; ++k) s += g[i][k] * ginv[k][j];
            CHECK(s == Rational(i == j ? 1 : 0));
        }
    // untwisted pairing on P^2
    RatMatrix g2 = gram_matrix(2, {}, 2);
    CHECK_NOTHROW(rat_matrix_inverse(g2));
    // a genuinely singular matrix is rejected
    RatMatrix sing{{1, 2}, {2, 4}};
    CHECK_THROWS(rat_matrix_inverse(sing));
}

TEST_CASE("dual basis reconstructs the minus part modulo the radical") {
    CHECK(dual_roundtrip_check(one_point_degree_one(2, {})));
    CHECK(dual_roundtrip_check(one_point_degree_one(3, {2})));
    CHECK(dual_roundtrip_check(one_point_degree_one(4, {5})));
    CHECK(dual_roundtrip_check(one_point_degree_one(4, {2, 2})));
}

TEST_CASE("K-minus membership test") {
    RingSpec pt = point_spec();
    QFunction proper = QFunction::monomial(pt, 1, 1);
    proper.push_den(DenFactor{RingElement::one(pt), 1, 2});
    CHECK(invariant_in_k_minus(proper));
    CHECK(invariant_in_k_minus(QFunction::zero(pt)));
    CHECK_FALSE(invariant_in_k_minus(QFunction::scalar(pt, 1)));
    QFunction pole = QFunction::monomial(pt, 1, -1);
    pole.push_den(DenFactor{RingElement::one(pt), 1, 2});
    CHECK_FALSE(invariant_in_k_minus(pole));
}
