#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "series.hpp"

namespace qk {

// Complete intersection in P^N cut out by hypersurfaces of the given degrees.
struct GeometrySpec {
    int N = 1;                 // ambient projective space P^N
    std::vector<int> degrees;  // one entry per convex line bundle O(l_j)
    int trunc = 1;             // Novikov truncation

    void validate() const {
        if (N < 1) throw std::invalid_argument("geometry: N must be >= 1");
        if (trunc < 0) throw std::invalid_argument("geometry: truncation must be >= 0");
        for (int l : degrees)
            if (l < 1) throw std::invalid_argument("geometry: bundle degrees must be >= 1");
    }
};

// (1-q) sum_d Q^d / prod_{r=1}^d (1 - P q^r)^{N+1}
inline NovikovSeries j_projective(int N, int trunc) {
    if (N < 1 || trunc < 0) throw std::invalid_argument("j_projective: bad arguments");
    RingSpec spec{{N + 1}};
    NovikovSeries s(spec, {{0, trunc}});
    RingElement P = RingElement::gen_P(spec, 0);
    for (int d = 0; d <= trunc; ++d) {
        QFunction c = QFunction::one_minus_q_pow(spec, 1);
        for (int r = 1; r <= d; ++r) c.push_den(DenFactor{P, r, N + 1});
        s.set_coeff({d}, c);
    }
    return s;
}

// Multiplies the degree-d coefficient by prod_{r=1}^{pairing(d)} (1 - Ldual q^r).
inline NovikovSeries lefschetz_modify(
    const NovikovSeries& s, const RingElement& l_dual,
    const std::function<long(const NovikovSeries::Degree&)>& degree_pairing) {
    return series_map(s, [&](const NovikovSeries::Degree& d, const QFunction& c) {
        long m = degree_pairing(d);
        if (m < 0)
            throw std::domain_error("lefschetz_modify: negative pairing on stored degree");
        QFunction r = c;
        for (long rr = 1; rr <= m; ++rr) {
            Laurent factor{{0, RingElement::one(s.spec())}};
            factor[static_cast<int>(rr)] = -l_dual;
            laurent_clean(factor);
            r = r * QFunction::from_laurent(s.spec(), factor);
        }
        return r;
    });
}

// Convenience overload for O(l) on P^N: Ldual = P^l, pairing d -> l*d.
inline NovikovSeries lefschetz_modify(const NovikovSeries& s, int l) {
    RingElement l_dual = ring_pow(RingElement::gen_P(s.spec(), 0), l);
    return lefschetz_modify(s, l_dual, [l](const NovikovSeries::Degree& d) {
        return static_cast<long>(l) * d.at(0);
    });
}

inline NovikovSeries i_complete_intersection(const GeometrySpec& g) {
    g.validate();
    NovikovSeries s = j_projective(g.N, g.trunc);
    for (int l : g.degrees) s = lefschetz_modify(s, l);
    return s;
}

// Toric fibration data: fiber X = C^N //_omega T^K presented by the weight
// matrix m (K x N), fibered over a base carried by base_series. The first K
// ring generators are the fiber classes P_i; the rest belong to the base.
struct ToricFibrationSpec {
    RingSpec ring;
    int fiber_vars = 1;                     // K
    std::vector<std::vector<int>> m_matrix; // K rows x N cols
    std::vector<std::vector<long>> l_dual_exponents; // per j: L_j^dual as line_class exps
    std::vector<std::vector<long>> c1_pairing;       // per j: <c1(L_j), -> on base degrees
    NovikovSeries base_series;              // J of the base; unit series for a point
    std::vector<std::pair<int, int>> fiber_trunc;    // two-sided bounds on d in Z^K

    int cols() const { return m_matrix.empty() ? 0 : static_cast<int>(m_matrix[0].size()); }

    void validate() const {
        ring.validate();
        if (fiber_vars < 1 || static_cast<int>(m_matrix.size()) != fiber_vars)
            throw std::invalid_argument("toric: m_matrix must have K rows");
        int N = cols();
        if (N < 1) throw std::invalid_argument("toric: m_matrix must have N >= 1 columns");
        for (const auto& row : m_matrix)
            if (static_cast<int>(row.size()) != N)
                throw std::invalid_argument("toric: ragged m_matrix");
        if (static_cast<int>(l_dual_exponents.size()) != N)
            throw std::invalid_argument("toric: need one L_j^dual per column");
        if (static_cast<int>(c1_pairing.size()) != N)
            throw std::invalid_argument("toric: need one c1 pairing row per column");
        if (static_cast<int>(fiber_trunc.size()) != fiber_vars)
            throw std::invalid_argument("toric: fiber truncation arity mismatch");
        if (!(base_series.spec() == ring))
            throw std::invalid_argument("toric: base series must live in the ambient ring");
        for (const auto& cp : c1_pairing)
            if (static_cast<int>(cp.size()) != base_series.vars())
                throw std::invalid_argument("toric: c1 pairing arity mismatch");
    }

    // Unit base series 1-q at degree 0 (base = point has no Novikov variables).
    static NovikovSeries point_base(const RingSpec& ring) {
        NovikovSeries s(ring, {});
        s.set_coeff({}, QFunction::one_minus_q_pow(ring, 1));
        return s;
    }
};

// U_j(P) = prod_i P_i^{m_ij} * L_j^dual as a ring element.
inline RingElement toric_u_class(const ToricFibrationSpec& t, int j) {
    RingElement u = line_class(t.ring, t.l_dual_exponents[static_cast<std::size_t>(j)]);
    for (int i = 0; i < t.fiber_vars; ++i)
        u = u * ring_pow(RingElement::gen_P(t.ring, i),
                         t.m_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return u;
}

// U_j(D) = sum_i d_i m_ij + <c1(L_j), D>.
inline long toric_u_degree(const ToricFibrationSpec& t, int j,
                           const std::vector<int>& fiber_d,
                           const std::vector<int>& base_d) {
    long u = 0;
    for (int i = 0; i < t.fiber_vars; ++i)
        u += static_cast<long>(fiber_d[static_cast<std::size_t>(i)]) *
             t.m_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const auto& cp = t.c1_pairing[static_cast<std::size_t>(j)];
    for (std::size_t b = 0; b < base_d.size(); ++b)
        u += cp[b] * base_d[b];
    return u;
}

// Coefficient at (d, D) is J_D times, per column j:
//   U_j(D) > 0 : 1 / prod_{r=1}^{U_j(D)} (1 - U_j(P) q^r)
//   U_j(D) = 0 : 1
//   U_j(D) < 0 : prod_{r=U_j(D)+1}^{0} (1 - U_j(P) q^r), a Laurent numerator
// (the doubly-infinite products of the fibration formula with the common
// tail r <= min(0, U_j(D)) cancelled).
inline NovikovSeries i_toric_fibration(const ToricFibrationSpec& t) {
    t.validate();
    int N = t.cols();
    std::vector<RingElement> u_class;
    u_class.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) u_class.push_back(toric_u_class(t, j));

    std::vector<std::pair<int, int>> trunc = t.fiber_trunc;
    for (const auto& bt : t.base_series.trunc()) trunc.push_back(bt);
    NovikovSeries out(t.ring, trunc);

    // iterate over the fiber degree box
    std::vector<int> d(static_cast<std::size_t>(t.fiber_vars));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = t.fiber_trunc[i].first;
    bool done = false;
    while (!done) {
        for (const auto& [D, jcoeff] : t.base_series.coeffs()) {
            QFunction c = jcoeff;
            bool dead = false;
            for (int j = 0; j < N && !dead; ++j) {
                long u = toric_u_degree(t, j, d, D);
                if (u > 0) {
                    if (!u_class[static_cast<std::size_t>(j)].is_unit())
                        throw std::domain_error(
                            "i_toric_fibration: non-unit class in a denominator factor");
                    for (long r = 1; r <= u; ++r)
                        c.push_den(DenFactor{u_class[static_cast<std::size_t>(j)],
                                             static_cast<int>(r), 1});
                } else if (u < 0) {
                    for (long r = u + 1; r <= 0; ++r) {
                        Laurent factor{{0, RingElement::one(t.ring)}};
                        auto it = factor.find(static_cast<int>(r));
                        if (it == factor.end())
                            factor[static_cast<int>(r)] = -u_class[static_cast<std::size_t>(j)];
                        else
                            it->second = it->second + (-u_class[static_cast<std::size_t>(j)]);
                        laurent_clean(factor);
                        c = c * QFunction::from_laurent(t.ring, factor);
                        if (c.is_zero()) { dead = true; break; }
                    }
                }
            }
            if (!dead && !c.is_zero()) {
                std::vector<int> full = d;
                full.insert(full.end(), D.begin(), D.end());
                out.set_coeff(full, c);
            }
        }
        // advance the box counter
        done = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < t.fiber_trunc[i].second) {
                ++d[i];
                for (std::size_t k = 0; k < i; ++k) d[k] = t.fiber_trunc[k].first;
                done = false;
                break;
            }
        }
    }
    return out;
}

} // namespace qk
