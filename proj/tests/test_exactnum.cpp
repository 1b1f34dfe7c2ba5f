#include <doctest.h>

#include <numeric>
#include <random>

#include "qk/cyclotomic.hpp"
#include "qk/rational.hpp"

using namespace qk;

TEST_CASE("rational string round-trip") {
    CHECK(rat_str(Rational(7)) == "7");
    CHECK(rat_str(Rational(-3, 6)) == "-1/2");
    CHECK(rat_parse("22/7") == Rational(22, 7));
    CHECK(rat_parse("-5") == Rational(-5));
    CHECK_THROWS(rat_parse("1/0"));
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(binomial(3, 7) == Rational(0));
    // C(-1, j) = (-1)^j drives the geometric expansion of 1/(1-u)
    for (long j = 0; j <= 8; ++j)
        CHECK(binomial(-1, j) == Rational((j % 2 == 0) ? 1 : -1));
    CHECK(binomial(-5, 2) == Rational(15));
}

static int phi_by_counting(int k) {
    int c = 0;
    for (int i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++c;
    return c;
}

TEST_CASE("cyclotomic polynomials against the product oracle") {
    // x^k - 1 must factor as prod_{d | k} Phi_d, an independent route from
    // the divisions used to build each Phi_d
    for (int k = 1; k <= 30; ++k) {
        QPoly prod{Rational(1)};
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        QPoly expect(static_cast<std::size_t>(k) + 1, Rational(0));
        expect[0] = -1;
        expect[static_cast<std::size_t>(k)] = 1;
        CHECK(poly_equal(prod, expect));

        QPoly phi = cyclotomic_polynomial(k);
        CHECK(poly_degree(phi) == phi_by_counting(k));
        for (const Rational& c : phi) CHECK(denominator(c) == 1);
    }
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("cyclotomic field axioms on random elements") {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int k = 1; k <= 6; ++k) {
        int deg = euler_phi(k);
        auto rand_elt = [&]() {
            QPoly p(static_cast<std::size_t>(deg), Rational(0));
            for (auto& c : p) c = coeff(rng);
            return CyclotomicNumber::from_poly(k, p);
        };
        for (int trial = 0; trial < 20; ++trial) {
            CyclotomicNumber a = rand_elt(), b = rand_elt(), c = rand_elt();
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            if (!a.is_zero()) {
                CyclotomicNumber one = CyclotomicNumber::from_rational(k, 1);
                CHECK(a * a.inverse() == one);
                CHECK(a / a == one);
            }
        }
    }
}

TEST_CASE("primitive root powers") {
    // eta^k = 1 and intermediate powers are nontrivial
    for (int k = 1; k <= 10; ++k) {
        CyclotomicNumber one = CyclotomicNumber::from_rational(k, 1);
        CHECK(CyclotomicNumber::root_power(k, k) == one);
        CHECK(CyclotomicNumber::root_power(k, -k) == one);
        for (int e = 1; e < k; ++e)
            CHECK_FALSE(CyclotomicNumber::root_power(k, e) == one);
    }
    // eta^e * eta^f = eta^{e+f}
    CyclotomicNumber a = CyclotomicNumber::root_power(5, 3);
    CyclotomicNumber b = CyclotomicNumber::root_power(5, 4);
    CHECK(a * b == CyclotomicNumber::root_power(5, 7));
}

TEST_CASE("root sum identity") {
    for (int k = 1; k <= 6; ++k)
        for (long l = -6; l <= 6; ++l)
            CHECK(check_root_sum_identity(k, l));
}
