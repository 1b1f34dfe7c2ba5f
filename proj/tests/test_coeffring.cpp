#include <doctest.h>

#include <random>

#include "qk/ring.hpp"

using namespace qk;

namespace {

RingElement random_element(const RingSpec& spec, std::mt19937& rng, bool unit) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    RingElement e(spec);
    std::vector<int> ex(static_cast<std::size_t>(spec.vars()), 0);
    // walk the full monomial box
    while (true) {
        e.add_term(ex, coeff(rng));
        std::size_t i = 0;
        for (; i < ex.size(); ++i) {
            if (ex[i] + 1 < spec.orders[i]) {
                ++ex[i];
                for (std::size_t j = 0; j < i; ++j) ex[j] = 0;
                break;
            }
        }
        if (i == ex.size()) break;
    }
    if (unit && e.scalar_part() == 0)
        e = e + RingElement::one(spec);
    return e;
}

} // namespace

TEST_CASE("nilpotency of the generators") {
    RingSpec spec{{3, 5}};
    RingElement u0 = RingElement::gen_u(spec, 0);
    RingElement u1 = RingElement::gen_u(spec, 1);
    CHECK(ring_pow(u0, 2).is_zero() == false);
    CHECK(ring_pow(u0, 3).is_zero());
    CHECK(ring_pow(u1, 4).is_zero() == false);
    CHECK(ring_pow(u1, 5).is_zero());
    // the point ring is just Q
    CHECK(RingElement::gen_u(point_spec(), 0).is_zero());
}

TEST_CASE("P telescoping sum") {
    // (1 + P + ... + P^{k-1})(P - 1) = P^k - 1
    RingSpec spec{{6}};
    RingElement P = RingElement::gen_P(spec, 0);
    RingElement one = RingElement::one(spec);
    for (long k = 1; k <= 7; ++k) {
        RingElement s = RingElement::zero(spec);
        for (long i = 0; i < k; ++i) s = s + ring_pow(P, i);
        CHECK(s * (P - one) == ring_pow(P, k) - one);
    }
}

TEST_CASE("ring inversion round-trip") {
    std::mt19937 rng(777u);
    std::vector<RingSpec> specs{{{2}}, {{5}}, {{3, 3}}, {{2, 4}}, {{2, 2, 2}}};
    for (const auto& spec : specs)
        for (int trial = 0; trial < 15; ++trial) {
            RingElement a = random_element(spec, rng, true);
            CHECK(ring_invert(a) * a == RingElement::one(spec));
        }
    CHECK_THROWS(ring_invert(RingElement::gen_u(RingSpec{{3}}, 0)));
}

TEST_CASE("negative powers") {
    RingSpec spec{{4}};
    RingElement P = RingElement::gen_P(spec, 0);
    CHECK(ring_pow(P, -2) * ring_pow(P, 2) == RingElement::one(spec));
    CHECK(ring_pow(P, -1) == ring_invert(P));
}

TEST_CASE("line classes") {
    RingSpec spec{{5}};
    RingElement P = RingElement::gen_P(spec, 0);
    CHECK(line_class(spec, {5}) == ring_pow(P, 5));
    CHECK(line_class(spec, {0}) == RingElement::one(spec));

    RingSpec spec2{{2, 3}};
    RingElement expect = ring_pow(RingElement::gen_P(spec2, 0), 2) *
                         ring_pow(RingElement::gen_P(spec2, 1), -1);
    CHECK(line_class(spec2, {2, -1}) == expect);
    CHECK_THROWS(line_class(spec2, {1}));
}

TEST_CASE("Adams operations are ring maps") {
    std::mt19937 rng(424242u);
    std::vector<RingSpec> specs{{{4}}, {{3, 3}}, {{2, 2, 3}}};
    std::vector<long> ks{-3, -2, -1, 1, 2, 3, 4, 5};
    for (const auto& spec : specs)
        for (long k : ks)
            for (int trial = 0; trial < 8; ++trial) {
                RingElement a = random_element(spec, rng, false);
                RingElement b = random_element(spec, rng, false);
                CHECK(adams(k, a * b) == adams(k, a) * adams(k, b));
                CHECK(adams(k, a + b) == adams(k, a) + adams(k, b));
            }
}

TEST_CASE("Adams composition") {
    std::mt19937 rng(9001u);
    RingSpec spec{{3, 4}};
    for (long j : {1L, 2L, 3L})
        for (long k : {-2L, -1L, 2L, 3L})
            for (int trial = 0; trial < 6; ++trial) {
                RingElement a = random_element(spec, rng, false);
                CHECK(adams(j, adams(k, a)) == adams(j * k, a));
            }
    RingElement a = random_element(spec, rng, false);
    CHECK(adams(1, a) == a);
    CHECK_THROWS(adams(0, a));
}

TEST_CASE("Adams on P and u explicitly") {
    RingSpec spec{{4}};
    RingElement P = RingElement::gen_P(spec, 0);
    RingElement u = RingElement::gen_u(spec, 0);
    CHECK(adams(3, P) == ring_pow(P, 3));
    CHECK(adams(2, u) == RingElement::one(spec) - ring_pow(P, 2));
    // psi^k(1) = 1
    CHECK(adams(7, RingElement::one(spec)) == RingElement::one(spec));
}
