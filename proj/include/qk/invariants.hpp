#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ifunctions.hpp"
#include "qfunction.hpp"

namespace qk {

// ---------------------------------------------------------------------------
// Laurent expansion in u = 1 - P with pure-q rational coefficients, and the
// residue pairing -Res_{P=1} ... dP/P.
// ---------------------------------------------------------------------------

// c[i] is the coefficient of u^{min_exp + i}.
struct ULaurent {
    int min_exp = 0;
    std::vector<QFunction> c;

    QFunction coeff(int e) const {
        int i = e - min_exp;
        if (i < 0 || i >= static_cast<int>(c.size()))
            return QFunction::zero(point_spec());
        return c[static_cast<std::size_t>(i)];
    }
};

// Multiplication, keeping exponents through `top` inclusive. Both operands
// must carry enough terms for the result to be exact up to `top`.
inline ULaurent ulaurent_mul(const ULaurent& a, const ULaurent& b, int top) {
    ULaurent r;
    r.min_exp = a.min_exp + b.min_exp;
    int n = top - r.min_exp + 1;
    if (n < 0) n = 0;
    r.c.assign(static_cast<std::size_t>(n), QFunction::zero(point_spec()));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::size_t k = i + j;
            if (k >= r.c.size()) break;
            if (b.c[j].is_zero()) continue;
            r.c[k] = r.c[k] + a.c[i] * b.c[j];
        }
    }
    return r;
}

// Inverse of a series with invertible lowest coefficient; c0_inv must be the
// exact reciprocal of a.c[0] (supplied in factored form by the caller).
inline ULaurent ulaurent_inverse(const ULaurent& a, const QFunction& c0_inv, int top) {
    if (a.c.empty() || a.c[0].is_zero())
        throw std::invalid_argument("ulaurent_inverse: lowest coefficient must be nonzero");
    ULaurent r;
    r.min_exp = -a.min_exp;
    int n = top - r.min_exp + 1;
    if (n < 1) n = 1;
    r.c.assign(static_cast<std::size_t>(n), QFunction::zero(point_spec()));
    r.c[0] = c0_inv;
    for (std::size_t j = 1; j < r.c.size(); ++j) {
        QFunction s = QFunction::zero(point_spec());
        for (std::size_t i = 1; i <= j && i < a.c.size(); ++i)
            s = s + a.c[i] * r.c[j - i];
        r.c[j] = -(c0_inv * s);
    }
    return r;
}

inline ULaurent ulaurent_pow(const ULaurent& base, const QFunction& c0_inv, int e, int top) {
    ULaurent acc;
    acc.min_exp = 0;
    acc.c.assign(static_cast<std::size_t>(std::max(1, top + 1)), QFunction::zero(point_spec()));
    acc.c[0] = QFunction::scalar(point_spec(), 1);
    if (e == 0) return acc;
    ULaurent b = e > 0 ? base : ulaurent_inverse(base, c0_inv, top - (-base.min_exp) * (std::abs(e) - 1));
    // expand b generously so repeated multiplication stays exact through `top`
    int times = std::abs(e);
    for (int i = 0; i < times; ++i) acc = ulaurent_mul(acc, b, top);
    return acc;
}

// One multiplicative factor of the residue integrand.
struct UFactor {
    enum Kind { PowerP, OneMinusPpow, OneMinusPqPow, Explicit } kind = PowerP;
    int base_exp = 1;  // b in (1-P^b) or e in (1-P^e q^r)
    int q_power = 0;   // r
    int exponent = 1;  // outer integer exponent (for PowerP: the power of P itself)
    ULaurent series;   // for Explicit
};

inline UFactor uf_power_p(int a) { return UFactor{UFactor::PowerP, 0, 0, a, {}}; }
inline UFactor uf_one_minus_p_pow(int b, int e) {
    if (b < 1) throw std::invalid_argument("factor (1-P^b) needs b >= 1");
    return UFactor{UFactor::OneMinusPpow, b, 0, e, {}};
}
inline UFactor uf_one_minus_pq(int b, int r, int e) {
    if (r < 1) throw std::invalid_argument("factor (1-P^b q^r) needs r >= 1");
    return UFactor{UFactor::OneMinusPqPow, b, r, e, {}};
}
inline UFactor uf_explicit(ULaurent s) {
    return UFactor{UFactor::Explicit, 0, 0, 1, std::move(s)};
}

// u-valuation contributed by a factor (P is a unit at P=1 only through u=0).
inline int uf_valuation(const UFactor& f) {
    switch (f.kind) {
        case UFactor::PowerP: return 0;
        case UFactor::OneMinusPpow: return f.exponent; // (1-P^b) = u * unit
        case UFactor::OneMinusPqPow: return 0;         // 1 - q^r at u = 0, a unit
        case UFactor::Explicit: {
            for (std::size_t i = 0; i < f.series.c.size(); ++i)
                if (!f.series.c[i].is_zero()) return f.series.min_exp + static_cast<int>(i);
            return 0;
        }
    }
    return 0;
}

// Expands one factor as a u-Laurent series exact through exponent `top`.
inline ULaurent uf_expand(const UFactor& f, int top) {
    RingSpec pt = point_spec();
    switch (f.kind) {
        case UFactor::PowerP: {
            // P^a = (1-u)^a = sum_j C(a,j) (-u)^j
            ULaurent s;
            s.min_exp = 0;
            int n = std::max(1, top + 1);
            s.c.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                Rational v = binomial(f.exponent, j) * ((j % 2 == 0) ? 1 : -1);
                s.c.push_back(QFunction::scalar(pt, v));
            }
            return s;
        }
        case UFactor::OneMinusPpow: {
            // 1 - (1-u)^b = u * h(u), h(0) = b
            ULaurent h;
            h.min_exp = 0;
            int hn = std::max(1, top - f.exponent + 2 + (std::abs(f.exponent) + 1));
            for (int j = 0; j < hn; ++j) {
                Rational v = binomial(f.base_exp, j + 1) * ((j % 2 == 0) ? 1 : -1);
                h.c.push_back(QFunction::scalar(pt, v));
            }
            ULaurent hp = ulaurent_pow(h, QFunction::scalar(pt, Rational(1, f.base_exp)),
                                       f.exponent, top - f.exponent);
            hp.min_exp += f.exponent; // the u^exponent prefactor
            return hp;
        }
        case UFactor::OneMinusPqPow: {
            // 1 - q^r (1-u)^b: constant term (1-q^r), a q-rational unit
            ULaurent base;
            base.min_exp = 0;
            int n = std::max(1, top + 2 + std::abs(f.exponent));
            for (int j = 0; j < n; ++j) {
                Rational bc = binomial(f.base_exp, j) * ((j % 2 == 0) ? 1 : -1);
                QFunction term = QFunction::monomial(pt, -bc, f.q_power);
                if (j == 0) term = term + QFunction::scalar(pt, 1);
                base.c.push_back(term);
            }
            QFunction c0_inv = QFunction::scalar(pt, 1);
            c0_inv.push_den(DenFactor{RingElement::one(pt), f.q_power, 1});
            return ulaurent_pow(base, c0_inv, f.exponent, top);
        }
        case UFactor::Explicit:
            return f.series;
    }
    throw std::logic_error("uf_expand: unreachable");
}

// Product of all factors as a u-Laurent series through exponent `order`.
// Errors out when the requested order cannot capture the u^{-1} coefficient.
inline ULaurent expand_in_u(const std::vector<UFactor>& factors, int order) {
    if (order < -1)
        throw std::invalid_argument("expand_in_u: order must reach the residue coefficient");
    int remaining = 0;
    for (const auto& f : factors) remaining += uf_valuation(f);
    ULaurent acc;
    acc.min_exp = 0;
    acc.c = {QFunction::scalar(point_spec(), 1)};
    for (const auto& f : factors) {
        remaining -= uf_valuation(f);
        // terms above this cap cannot reach u^order once the remaining
        // factors contribute at least their valuations
        int cap = order - remaining;
        int top_f = cap - acc.min_exp;
        ULaurent fe = uf_expand(f, top_f + 1);
        acc = ulaurent_mul(acc, fe, cap);
    }
    return acc;
}

// -Res_{P=1} of the integrand (the measure dP/P must be part of the factor
// list as P^{-1}); under u = 1 - P we have dP = -du, which absorbs the
// leading minus. Orientation locked by chi(P^N, O) = 1.
inline QFunction residue_at_P1(const std::vector<UFactor>& factors) {
    ULaurent e = expand_in_u(factors, 0);
    QFunction r = e.coeff(-1);
    r.reduce();
    return r;
}

// chi(X, a * prod_j (1 - P^{l_j})) computed as a residue on the ambient P^N;
// exponent-only version used for Gram matrices (P^a for any integer a).
inline Rational euler_char_power(int N, int a, const std::vector<int>& euler_factors) {
    std::vector<UFactor> fs;
    fs.push_back(uf_power_p(a));
    for (int l : euler_factors) fs.push_back(uf_one_minus_p_pow(l, 1));
    fs.push_back(uf_one_minus_p_pow(1, -(N + 1)));
    fs.push_back(uf_power_p(-1)); // measure dP/P
    QFunction r = residue_at_P1(fs);
    if (r.is_zero()) return 0;
    if (!r.den().empty() || r.num().size() != 1 || r.num().begin()->first != 0)
        throw std::logic_error("euler_char: q-dependent residue for a q-free integrand");
    return r.num().begin()->second.scalar_part();
}

inline Rational euler_char(int N, const RingElement& a, const std::vector<int>& euler_factors) {
    ULaurent s;
    s.min_exp = 0;
    int n = N + 2;
    s.c.assign(static_cast<std::size_t>(n), QFunction::zero(point_spec()));
    for (const auto& [e, c] : a.terms()) {
        if (e.size() != 1) throw std::invalid_argument("euler_char: element must live in a P^N ring");
        if (e[0] < n) s.c[static_cast<std::size_t>(e[0])] = QFunction::scalar(point_spec(), c);
    }
    std::vector<UFactor> fs;
    fs.push_back(uf_explicit(s));
    for (int l : euler_factors) fs.push_back(uf_one_minus_p_pow(l, 1));
    fs.push_back(uf_one_minus_p_pow(1, -(N + 1)));
    fs.push_back(uf_power_p(-1));
    QFunction r = residue_at_P1(fs);
    if (r.is_zero()) return 0;
    if (!r.den().empty() || r.num().size() != 1 || r.num().begin()->first != 0)
        throw std::logic_error("euler_char: q-dependent residue for a q-free integrand");
    return r.num().begin()->second.scalar_part();
}

// ---------------------------------------------------------------------------
// One-point degree-one invariants from the split I-function coefficient
// ---------------------------------------------------------------------------

struct OnePointResult {
    int N = 0;
    std::vector<int> degrees;
    int dim = 0;                      // dim X = N - #degrees
    Laurent plus;                     // K_+ part of the degree-1 coefficient
    QFunction minus;                  // K_- part, over the ambient ring
    std::vector<QFunction> invariants; // pure q, indexed by basis class P^a
};

// Assembles the residue integrand for the minus part paired against P^a:
//   -Res_{P=1} g(P,q) P^a prod_j (1-P^{l_j}) / ((1-P)^{N+1} (1-Pq)^{...} P) dP/P-free
inline QFunction pair_minus_against(const QFunction& minus, int N,
                                    const std::vector<int>& degrees, int a) {
    const RingSpec& spec = minus.spec();
    RingElement P = RingElement::gen_P(spec, 0);

    // numerator g(P,q) as an explicit u-series (the ring basis is powers of u)
    ULaurent g;
    g.min_exp = 0;
    g.c.assign(static_cast<std::size_t>(spec.orders[0]), QFunction::zero(point_spec()));
    for (const auto& [qe, re] : minus.num())
        for (const auto& [ue, c] : re.terms())
            g.c[static_cast<std::size_t>(ue[0])] =
                g.c[static_cast<std::size_t>(ue[0])] + QFunction::monomial(point_spec(), c, qe);

    std::vector<UFactor> fs;
    fs.push_back(uf_explicit(g));
    for (const auto& d : minus.den()) {
        int w = -1;
        for (int t = 0; t <= N; ++t)
            if (d.unit == ring_pow(P, t)) { w = t; break; }
        if (w < 0)
            throw std::domain_error("pair_minus_against: denominator unit is not a power of P");
        if (w == 0)
            fs.push_back(uf_one_minus_pq(0, d.power, -d.mult));
        else
            fs.push_back(uf_one_minus_pq(w, d.power, -d.mult));
    }
    fs.push_back(uf_power_p(a));
    for (int l : degrees) fs.push_back(uf_one_minus_p_pow(l, 1));
    fs.push_back(uf_one_minus_p_pow(1, -(N + 1)));
    fs.push_back(uf_power_p(-1));
    return residue_at_P1(fs);
}

inline OnePointResult one_point_degree_one(int N, const std::vector<int>& degrees) {
    GeometrySpec g{N, degrees, 1};
    g.validate();
    OnePointResult out;
    out.N = N;
    out.degrees = degrees;
    out.dim = N - static_cast<int>(degrees.size());
    if (out.dim < 0) throw std::invalid_argument("one_point_degree_one: negative dimension");
    NovikovSeries s = i_complete_intersection(g);
    SplitResult sp = split_polarization(s.coeff({1}));
    out.plus = sp.plus;
    out.minus = sp.minus;
    for (int a = 0; a <= out.dim; ++a)
        out.invariants.push_back(pair_minus_against(sp.minus, N, degrees, a));
    return out;
}

// ---------------------------------------------------------------------------
// Twisted pairing Gram matrix for the basis {P^a} and dual-basis machinery
// ---------------------------------------------------------------------------

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix gram_matrix(int N, const std::vector<int>& degrees, int dim) {
    RatMatrix gm(static_cast<std::size_t>(dim) + 1,
                 std::vector<Rational>(static_cast<std::size_t>(dim) + 1));
    for (int a = 0; a <= dim; ++a)
        for (int b = 0; b <= dim; ++b)
            gm[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                euler_char_power(N, a + b, degrees);
    return gm;
}

// Exact inverse by Gauss-Jordan elimination; throws when singular.
inline RatMatrix rat_matrix_inverse(RatMatrix m) {
    std::size_t n = m.size();
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("rat_matrix_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) { m[col][j] /= d; inv[col][j] /= d; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Lift a pure-q rational function into a larger coefficient ring.
inline QFunction qf_lift(const QFunction& f, const RingSpec& spec) {
    Laurent num;
    for (const auto& [e, c] : f.num()) num[e] = RingElement::constant(spec, c.scalar_part());
    QFunction r = QFunction::from_laurent(spec, num);
    for (const auto& d : f.den())
        r.push_den(DenFactor{RingElement::constant(spec, d.unit.scalar_part()), d.power, d.mult});
    return r;
}

// Dual-basis roundtrip: sum_a Phi^a <Phi_a/(1-qL)> must reproduce the minus
// part modulo the radical of the twisted pairing (u-powers above dim X).
inline bool dual_roundtrip_check(const OnePointResult& r) {
    const RingSpec& spec = r.minus.spec();
    RingElement P = RingElement::gen_P(spec, 0);
    RatMatrix ginv = rat_matrix_inverse(gram_matrix(r.N, r.degrees, r.dim));
    QFunction recon = QFunction::zero(spec);
    for (int a = 0; a <= r.dim; ++a) {
        RingElement dual = RingElement::zero(spec);
        for (int b = 0; b <= r.dim; ++b)
            dual = dual + ring_pow(P, b) * ginv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        recon = recon + QFunction::constant(spec, dual) *
                            qf_lift(r.invariants[static_cast<std::size_t>(a)], spec);
    }
    QFunction diff = recon - r.minus;
    for (const auto& [qe, re] : diff.num())
        for (const auto& [ue, c] : re.terms())
            if (ue[0] <= r.dim && c != 0) return false;
    return true;
}

// Structural sanity of extracted invariants: proper at q = infinity and
// regular at q = 0.
inline bool invariant_in_k_minus(const QFunction& f) {
    if (f.is_zero()) return true;
    if (f.num().begin()->first < 0) return false;
    int dden = 0;
    for (const auto& d : f.den()) dden += d.power * d.mult;
    return f.num().rbegin()->first < dden;
}

} // namespace qk
