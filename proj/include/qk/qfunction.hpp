#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace qk {

// Laurent polynomial in q with RingElement coefficients.
using Laurent = std::map<int, RingElement>;

inline void laurent_clean(Laurent& a) {
    for (auto it = a.begin(); it != a.end();)
        it = it->second.is_zero() ? a.erase(it) : std::next(it);
}

inline Laurent laurent_add(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end())
            r[e] = c;
        else
            it->second = it->second + c;
    }
    laurent_clean(r);
    return r;
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            RingElement p = ca * cb;
            if (p.is_zero()) continue;
            auto it = r.find(ea + eb);
            if (it == r.end())
                r[ea + eb] = p;
            else
                it->second = it->second + p;
        }
    laurent_clean(r);
    return r;
}

inline Laurent laurent_scale(const Laurent& a, const RingElement& c) {
    Laurent r;
    for (const auto& [e, v] : a) {
        RingElement p = v * c;
        if (!p.is_zero()) r[e] = p;
    }
    return r;
}

// A single denominator factor (1 - unit q^power)^mult.
struct DenFactor {
    RingElement unit;
    int power = 1;
    int mult = 1;
};

inline bool den_factor_less(const DenFactor& a, const DenFactor& b) {
    if (a.power != b.power) return a.power < b.power;
    return a.unit.compare(b.unit) < 0;
}

// Rational function of q over a coefficient ring: Laurent numerator over a
// multiset of factors (1 - unit q^r)^m with every unit invertible.
class QFunction {
public:
    QFunction() : spec_{{1}} {}
    explicit QFunction(RingSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

    static QFunction zero(const RingSpec& spec) { return QFunction(spec); }

    static QFunction from_laurent(const RingSpec& spec, Laurent num) {
        QFunction f(spec);
        f.num_ = std::move(num);
        f.normalize();
        return f;
    }

    static QFunction constant(const RingSpec& spec, const RingElement& c) {
        return from_laurent(spec, Laurent{{0, c}});
    }

    static QFunction scalar(const RingSpec& spec, const Rational& c) {
        return constant(spec, RingElement::constant(spec, c));
    }

    // c * q^e
    static QFunction monomial(const RingSpec& spec, const Rational& c, int e) {
        return from_laurent(spec, Laurent{{e, RingElement::constant(spec, c)}});
    }

    // 1 - q^r (as a numerator polynomial)
    static QFunction one_minus_q_pow(const RingSpec& spec, int r) {
        Laurent n;
        n[0] = RingElement::one(spec);
        n[r] = -RingElement::one(spec);
        return from_laurent(spec, n);
    }

    const RingSpec& spec() const { return spec_; }
    const Laurent& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    void push_den(const DenFactor& f) {
        if (f.power < 1 || f.mult < 1)
            throw std::invalid_argument("denominator factor needs power >= 1 and mult >= 1");
        if (!f.unit.is_unit())
            throw std::invalid_argument("denominator factor unit has zero scalar part");
        den_.push_back(f);
        normalize();
    }

    QFunction operator*(const QFunction& o) const {
        check_spec(o);
        QFunction r(spec_);
        r.num_ = laurent_mul(num_, o.num_);
        r.den_ = den_;
        r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
        r.normalize();
        return r;
    }

    QFunction operator+(const QFunction& o) const {
        check_spec(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // common denominator: per (unit, power) key take the max multiplicity
        std::vector<DenFactor> common = merge_den(den_, o.den_);
        Laurent na = laurent_mul(num_, expand_factors(missing(common, den_)));
        Laurent nb = laurent_mul(o.num_, expand_factors(missing(common, o.den_)));
        QFunction r(spec_);
        r.num_ = laurent_add(na, nb);
        r.den_ = common;
        r.normalize();
        return r;
    }

    QFunction operator-() const {
        QFunction r = *this;
        for (auto& [e, c] : r.num_) c = -c;
        return r;
    }

    QFunction operator-(const QFunction& o) const { return *this + (-o); }

    // Structural (representation) equality.
    bool operator==(const QFunction& o) const {
        if (!(spec_ == o.spec_) || num_ != o.num_) return false;
        if (den_.size() != o.den_.size()) return false;
        for (std::size_t i = 0; i < den_.size(); ++i)
            if (den_[i].power != o.den_[i].power || den_[i].mult != o.den_[i].mult ||
                !(den_[i].unit == o.den_[i].unit))
                return false;
        return true;
    }

    Laurent den_expanded() const { return expand_factors(den_); }

    void check_spec(const QFunction& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("qfunction ring mismatch");
    }

    // Cancel denominator factors that divide the numerator exactly; used to
    // keep extracted invariants in lowest terms.
    void reduce() {
        std::vector<DenFactor> kept;
        for (auto f : den_) {
            while (f.mult > 0) {
                Laurent factor{{0, RingElement::one(spec_)}};
                factor[f.power] = factor[f.power] + (-f.unit);
                laurent_clean(factor);
                Laurent quot;
                if (!try_divide(num_, factor, quot)) break;
                num_ = quot;
                --f.mult;
            }
            if (f.mult > 0) kept.push_back(f);
        }
        den_ = kept;
        normalize();
    }

private:
    void normalize() {
        laurent_clean(num_);
        if (num_.empty()) {
            den_.clear();
            return;
        }
        for (const auto& f : den_)
            if (!f.unit.is_unit())
                throw std::invalid_argument("denominator factor unit has zero scalar part");
        std::sort(den_.begin(), den_.end(), den_factor_less);
        std::vector<DenFactor> merged;
        for (const auto& f : den_) {
            if (!merged.empty() && merged.back().power == f.power &&
                merged.back().unit == f.unit)
                merged.back().mult += f.mult;
            else
                merged.push_back(f);
        }
        den_ = std::move(merged);
    }

    Laurent expand_factors(const std::vector<DenFactor>& fs) const {
        Laurent r{{0, RingElement::one(spec_)}};
        for (const auto& f : fs)
            for (int i = 0; i < f.mult; ++i) {
                Laurent factor{{0, RingElement::one(spec_)}};
                auto it = factor.find(f.power);
                if (it == factor.end())
                    factor[f.power] = -f.unit;
                else
                    it->second = it->second + (-f.unit);
                laurent_clean(factor);
                r = laurent_mul(r, factor);
            }
        return r;
    }

    static std::vector<DenFactor> merge_den(const std::vector<DenFactor>& a,
                                            const std::vector<DenFactor>& b) {
        std::vector<DenFactor> r = a;
        for (const auto& f : b) {
            bool found = false;
            for (auto& g : r)
                if (g.power == f.power && g.unit == f.unit) {
                    g.mult = std::max(g.mult, f.mult);
                    found = true;
                    break;
                }
            if (!found) r.push_back(f);
        }
        std::sort(r.begin(), r.end(), den_factor_less);
        return r;
    }

    // Factors present in `all` beyond those in `have`.
    static std::vector<DenFactor> missing(const std::vector<DenFactor>& all,
                                          const std::vector<DenFactor>& have) {
        std::vector<DenFactor> r;
        for (const auto& f : all) {
            int held = 0;
            for (const auto& g : have)
                if (g.power == f.power && g.unit == f.unit) held = g.mult;
            if (f.mult > held) r.push_back(DenFactor{f.unit, f.power, f.mult - held});
        }
        return r;
    }

    // Exact Laurent division by a divisor whose lowest coefficient is a unit.
    // Returns false when the division does not terminate exactly.
    static bool try_divide(const Laurent& a, const Laurent& b, Laurent& quot) {
        quot.clear();
        if (a.empty()) return true;
        if (b.empty()) return false;
        int b_lo = b.begin()->first;
        int b_hi = b.rbegin()->first;
        if (!b.begin()->second.is_unit()) return false;
        RingElement b0_inv = ring_invert(b.begin()->second);
        int a_hi = a.rbegin()->first;
        Laurent rem = a;
        while (!rem.empty()) {
            int e = rem.begin()->first;
            if (e - b_lo + b_hi > a_hi && b_hi > b_lo) return false; // cannot be exact
            RingElement c = rem.begin()->second * b0_inv;
            quot[e - b_lo] = c;
            for (const auto& [eb, cb] : b) {
                auto it = rem.find(e - b_lo + eb);
                RingElement v = (it == rem.end() ? RingElement::zero(c.spec()) : it->second) -
                                c * cb;
                if (v.is_zero()) {
                    if (it != rem.end()) rem.erase(it);
                } else {
                    rem[e - b_lo + eb] = v;
                }
            }
        }
        return true;
    }

    RingSpec spec_;
    Laurent num_;
    std::vector<DenFactor> den_;
};

// Mathematical equality by cross-multiplication of numerators against the
// expanded denominators.
inline bool qf_equal(const QFunction& a, const QFunction& b) {
    a.check_spec(b);
    Laurent lhs = laurent_mul(a.num(), b.den_expanded());
    Laurent rhs = laurent_mul(b.num(), a.den_expanded());
    return lhs == rhs;
}

// psi^k on rational functions of q: Adams on all coefficients and units,
// q -> q^k on every exponent.
inline QFunction qf_adams(long k, const QFunction& f) {
    if (k < 1) throw std::invalid_argument("qf_adams: k must be >= 1");
    Laurent num;
    for (const auto& [e, c] : f.num()) num[e * static_cast<int>(k)] = adams(k, c);
    QFunction r = QFunction::from_laurent(f.spec(), std::move(num));
    for (const auto& d : f.den())
        r.push_den(DenFactor{adams(k, d.unit), d.power * static_cast<int>(k), d.mult});
    return r;
}

// Evaluation at q = 0; every denominator factor is 1 there.
inline RingElement qf_eval_q0(const QFunction& f) {
    if (f.is_zero()) return RingElement::zero(f.spec());
    if (f.num().begin()->first < 0)
        throw std::domain_error("qf_eval_q0: pole at q = 0");
    auto it = f.num().find(0);
    return it == f.num().end() ? RingElement::zero(f.spec()) : it->second;
}

struct SplitResult {
    Laurent plus;     // Laurent polynomial in q (the K_+ part)
    QFunction minus;  // proper fraction, regular at q = 0, vanishing at q = infinity
};

// Polarization split f = plus + minus. The minus part has numerator q-degree
// strictly below the total denominator q-degree and no pole at q = 0.
inline SplitResult split_polarization(const QFunction& f) {
    SplitResult out;
    out.minus = QFunction::zero(f.spec());
    if (f.is_zero()) return out;

    int e_min = f.num().begin()->first;
    int shift = e_min < 0 ? -e_min : 0;

    // numerator as a plain polynomial in q (index = exponent after shift)
    Laurent npoly;
    for (const auto& [e, c] : f.num()) npoly[e + shift] = c;

    Laurent dpoly = f.den_expanded(); // constant term 1, leading coeff a unit
    int ddeg = dpoly.empty() ? 0 : dpoly.rbegin()->first;

    if (ddeg == 0) { // no denominator: everything is K_+
        out.plus = f.num();
        return out;
    }

    // long division from the top: npoly = S*dpoly + R, deg R < ddeg
    RingElement lead_inv = ring_invert(dpoly.rbegin()->second);
    Laurent S, R = npoly;
    while (!R.empty() && R.rbegin()->first >= ddeg) {
        int e = R.rbegin()->first;
        RingElement c = R.rbegin()->second * lead_inv;
        S[e - ddeg] = c;
        for (const auto& [ed, cd] : dpoly) {
            auto it = R.find(e - ddeg + ed);
            RingElement v =
                (it == R.end() ? RingElement::zero(c.spec()) : it->second) - c * cd;
            if (v.is_zero()) {
                if (it != R.end()) R.erase(it);
            } else {
                R[e - ddeg + ed] = v;
            }
        }
    }
    for (const auto& [e, c] : S) out.plus[e - shift] = c;

    if (shift > 0 && !R.empty()) {
        // peel the power-series coefficients of R/D below q^shift so the
        // remaining proper part is regular at q = 0 (D(0) = 1)
        std::vector<RingElement> c(static_cast<std::size_t>(shift),
                                   RingElement::zero(f.spec()));
        auto coeff_of = [](const Laurent& L, int e) {
            auto it = L.find(e);
            return it == L.end() ? std::optional<RingElement>() : std::optional<RingElement>(it->second);
        };
        for (int j = 0; j < shift; ++j) {
            RingElement v = RingElement::zero(f.spec());
            if (auto r = coeff_of(R, j)) v = *r;
            for (int i = 1; i <= j; ++i)
                if (auto d = coeff_of(dpoly, i)) v = v - (*d) * c[static_cast<std::size_t>(j - i)];
            c[static_cast<std::size_t>(j)] = v;
            if (!v.is_zero()) {
                auto it = out.plus.find(j - shift);
                if (it == out.plus.end())
                    out.plus[j - shift] = v;
                else
                    it->second = it->second + v;
            }
        }
        // T = (R - D * sum_j c_j q^j) / q^shift, exactly
        Laurent cpoly;
        for (int j = 0; j < shift; ++j)
            if (!c[static_cast<std::size_t>(j)].is_zero()) cpoly[j] = c[static_cast<std::size_t>(j)];
        Laurent T_num = laurent_add(R, laurent_scale(laurent_mul(dpoly, cpoly),
                                                     -RingElement::one(f.spec())));
        Laurent T;
        for (const auto& [e, v] : T_num) {
            if (e < shift) throw std::logic_error("split_polarization: inexact peel");
            T[e - shift] = v;
        }
        R = T;
    }
    laurent_clean(out.plus);

    QFunction minus = QFunction::from_laurent(f.spec(), R);
    for (const auto& d : f.den()) minus.push_den(d);
    out.minus = minus;
    return out;
}

// Recombine a split; used as the round-trip oracle.
inline QFunction split_recombine(const SplitResult& s, const RingSpec& spec) {
    return QFunction::from_laurent(spec, s.plus) + s.minus;
}

} // namespace qk
