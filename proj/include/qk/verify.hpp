#pragma once

#include <random>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "operators.hpp"

namespace qk {

struct CheckResult {
    std::string name;
    bool passed = false;
};

struct VerifyOptions {
    std::vector<int> k_list{2, 3, 4};
    int order = 8;
};

inline std::vector<CheckResult> verify_gamma(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int m = 0; m <= 5; ++m)
        out.push_back({"gamma_telescoping m=" + std::to_string(m) +
                           " M=" + std::to_string(opt.order),
                       gamma_telescoping_check(m, opt.order)});
    return out;
}

inline std::vector<CheckResult> verify_em(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    int zorder = std::max(opt.order, 10);
    for (int j = 0; j <= 6; ++j)
        out.push_back({"euler_maclaurin x^" + std::to_string(j) +
                           " order=" + std::to_string(zorder),
                       euler_maclaurin_oracle_check(poly_x_power(static_cast<std::size_t>(j)),
                                                    zorder)});
    return out;
}

inline std::vector<CheckResult> verify_mobius(const VerifyOptions&) {
    std::vector<CheckResult> out;
    const int L = 24;
    // Euler-class specialization s_l = -1/l must invert to t = (-1, 0, 0, ...)
    std::vector<Rational> s(L);
    for (int l = 1; l <= L; ++l) s[static_cast<std::size_t>(l - 1)] = Rational(-1, l);
    bool euler_ok = true;
    try {
        std::vector<Rational> t = mobius_invert(s);
        euler_ok = (t[0] == -1);
        for (int k = 2; k <= L; ++k)
            if (t[static_cast<std::size_t>(k - 1)] != 0) euler_ok = false;
    } catch (...) {
        euler_ok = false;
    }
    out.push_back({"mobius_euler_specialization L=24", euler_ok});

    bool rand_ok = true;
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 100 && rand_ok; ++trial) {
        std::vector<Rational> sr(L);
        for (int l = 0; l < L; ++l) sr[static_cast<std::size_t>(l)] = Rational(num(rng), den(rng));
        try {
            mobius_invert(sr); // throws if the forward substitution fails
        } catch (...) {
            rand_ok = false;
        }
    }
    out.push_back({"mobius_roundtrip 100 random inputs", rand_ok});
    return out;
}

inline std::vector<CheckResult> verify_poles(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int k : opt.k_list) {
        int L = 12 * k;
        out.push_back({"pole_cancellation_R k=" + std::to_string(k) + " L=" + std::to_string(L),
                       check_regular_at_one(pole_series_R(k, L))});
        out.push_back({"pole_cancellation_box k=" + std::to_string(k) + " L=" + std::to_string(L),
                       check_regular_at_one(pole_series_box(k, L))});
    }
    return out;
}

// The P^N symplectic-reduction presentation of the fibration series must
// reproduce the projective-space series coefficient-wise.
inline bool toric_matches_projective(int N, int D) {
    RingSpec spec{{N + 1}};
    ToricFibrationSpec t;
    t.ring = spec;
    t.fiber_vars = 1;
    t.m_matrix = {std::vector<int>(static_cast<std::size_t>(N) + 1, 1)};
    t.l_dual_exponents.assign(static_cast<std::size_t>(N) + 1, std::vector<long>{0});
    t.c1_pairing.assign(static_cast<std::size_t>(N) + 1, std::vector<long>{});
    t.base_series = ToricFibrationSpec::point_base(spec);
    t.fiber_trunc = {{0, D}};
    NovikovSeries toric = i_toric_fibration(t);
    NovikovSeries jp = j_projective(N, D);
    for (int d = 0; d <= D; ++d)
        if (!qf_equal(toric.coeff({d}), jp.coeff({d}))) return false;
    return true;
}

// P^1 x P^1 presented with K = 2: coefficient at (d1, d2) must be
// (1-q) / (prod_{r=1}^{d1} (1-P1 q^r)^2 prod_{r=1}^{d2} (1-P2 q^r)^2).
inline bool toric_p1p1_product_formula(int D) {
    RingSpec spec{{2, 2}};
    ToricFibrationSpec t;
    t.ring = spec;
    t.fiber_vars = 2;
    t.m_matrix = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    t.l_dual_exponents.assign(4, std::vector<long>{0, 0});
    t.c1_pairing.assign(4, std::vector<long>{});
    t.base_series = ToricFibrationSpec::point_base(spec);
    t.fiber_trunc = {{0, D}, {0, D}};
    NovikovSeries toric = i_toric_fibration(t);
    for (int d1 = 0; d1 <= D; ++d1)
        for (int d2 = 0; d2 <= D; ++d2) {
            QFunction expect = QFunction::one_minus_q_pow(spec, 1);
            for (int r = 1; r <= d1; ++r)
                expect.push_den(DenFactor{RingElement::gen_P(spec, 0), r, 2});
            for (int r = 1; r <= d2; ++r)
                expect.push_den(DenFactor{RingElement::gen_P(spec, 1), r, 2});
            if (!qf_equal(toric.coeff({d1, d2}), expect)) return false;
        }
    return true;
}

inline std::vector<CheckResult> verify_toric(const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (int N = 1; N <= 3; ++N)
        out.push_back({"toric_projective_presentation N=" + std::to_string(N) + " D=3",
                       toric_matches_projective(N, 3)});
    out.push_back({"toric_p1xp1_product_formula D=2", toric_p1p1_product_formula(2)});
    return out;
}

inline std::vector<CheckResult> verify_lefschetz_equiv(const VerifyOptions&) {
    std::vector<CheckResult> out;
    out.push_back({"lefschetz_operator_equivalence N=4 l=5 D=3",
                   lefschetz_operator_equivalence(4, 5, 3)});
    out.push_back({"lefschetz_operator_equivalence N=1 l=1 D=3",
                   lefschetz_operator_equivalence(1, 1, 3)});
    return out;
}

inline std::vector<CheckResult> run_verify_suites(const std::vector<std::string>& suites,
                                                  const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto want = [&](const std::string& s) {
        for (const auto& x : suites)
            if (x == s || x == "all") return true;
        return false;
    };
    if (want("gamma")) for (auto& c : verify_gamma(opt)) out.push_back(c);
    if (want("em")) for (auto& c : verify_em(opt)) out.push_back(c);
    if (want("mobius")) for (auto& c : verify_mobius(opt)) out.push_back(c);
    if (want("poles")) for (auto& c : verify_poles(opt)) out.push_back(c);
    if (want("toric")) for (auto& c : verify_toric(opt)) out.push_back(c);
    if (want("lefschetz-equiv")) for (auto& c : verify_lefschetz_equiv(opt)) out.push_back(c);
    return out;
}

} // namespace qk
