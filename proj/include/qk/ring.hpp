#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace qk {

// Q[u_1,...,u_K]/(u_i^{orders[i]}), with tautological classes P_i = 1 - u_i.
// Models K^0 of a product of projective spaces; orders[i] = n_i + 1.
struct RingSpec {
    std::vector<int> orders;

    int vars() const { return static_cast<int>(orders.size()); }

    void validate() const {
        if (orders.empty()) throw std::invalid_argument("ring spec needs at least one generator");
        for (int o : orders)
            if (o < 1) throw std::invalid_argument("ring nilpotency order must be >= 1");
    }

    bool operator==(const RingSpec&) const = default;
};

// The one-generator ring with u = 0, i.e. the ground field Q.
inline RingSpec point_spec() { return RingSpec{{1}}; }

class RingElement {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Rational>;

    RingElement() : spec_{{1}} {}
    explicit RingElement(RingSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

    static RingElement zero(const RingSpec& spec) { return RingElement(spec); }

    static RingElement constant(const RingSpec& spec, const Rational& c) {
        RingElement e(spec);
        e.set_term(Exponent(static_cast<std::size_t>(spec.vars()), 0), c);
        return e;
    }

    static RingElement one(const RingSpec& spec) { return constant(spec, 1); }

    // Generator u_i (zero when u_i is already nilpotent of order 1).
    static RingElement gen_u(const RingSpec& spec, int i) {
        RingElement e(spec);
        Exponent ex(static_cast<std::size_t>(spec.vars()), 0);
        ex[static_cast<std::size_t>(i)] = 1;
        e.set_term(ex, 1);
        return e;
    }

    // Tautological class P_i = 1 - u_i.
    static RingElement gen_P(const RingSpec& spec, int i) {
        return one(spec) - gen_u(spec, i);
    }

    const RingSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational scalar_part() const {
        Exponent zero_exp(static_cast<std::size_t>(spec_.vars()), 0);
        auto it = terms_.find(zero_exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_unit() const { return scalar_part() != 0; }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_term(const Exponent& e, const Rational& c) {
        if (static_cast<int>(e.size()) != spec_.vars())
            throw std::invalid_argument("exponent arity mismatch");
        for (int i = 0; i < spec_.vars(); ++i)
            if (e[static_cast<std::size_t>(i)] < 0 ||
                e[static_cast<std::size_t>(i)] >= spec_.orders[static_cast<std::size_t>(i)])
                return; // beyond nilpotency bound: the term is zero
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0) return;
        for (int i = 0; i < spec_.vars(); ++i)
            if (e[static_cast<std::size_t>(i)] >= spec_.orders[static_cast<std::size_t>(i)])
                return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RingElement operator+(const RingElement& o) const {
        check_spec(o);
        RingElement r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    RingElement operator-() const {
        RingElement r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    RingElement operator-(const RingElement& o) const { return *this + (-o); }

    RingElement operator*(const RingElement& o) const {
        check_spec(o);
        RingElement r(spec_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exponent e(ea.size());
                bool alive = true;
                for (std::size_t i = 0; i < ea.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] >= spec_.orders[i]) { alive = false; break; }
                }
                if (alive) r.add_term(e, ca * cb);
            }
        return r;
    }

    RingElement operator*(const Rational& c) const {
        RingElement r(spec_);
        for (const auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }

    bool operator==(const RingElement& o) const {
        return spec_ == o.spec_ && terms_ == o.terms_;
    }

    // Total order for use as a sort/multiset key.
    int compare(const RingElement& o) const {
        if (terms_ < o.terms_) return -1;
        if (o.terms_ < terms_) return 1;
        return 0;
    }

private:
    void check_spec(const RingElement& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("ring spec mismatch");
    }

    RingSpec spec_;
    TermMap terms_;
};

// Exact inverse of a unit: with a = s + n (s scalar, n nilpotent),
// a^{-1} = s^{-1} sum_j (-n/s)^j, which terminates.
inline RingElement ring_invert(const RingElement& a) {
    Rational s = a.scalar_part();
    if (s == 0) throw std::domain_error("ring_invert: element is not a unit");
    const RingSpec& spec = a.spec();
    RingElement n = a - RingElement::constant(spec, s);
    int max_order = 0;
    for (int o : spec.orders) max_order += o - 1;
    RingElement result = RingElement::zero(spec);
    RingElement power = RingElement::one(spec);
    for (int j = 0; j <= max_order; ++j) {
        result = result + power * (Rational(1) / s);
        power = power * (n * (Rational(-1) / s));
        if (power.is_zero()) break;
    }
    return result;
}

inline RingElement ring_pow(const RingElement& a, long k) {
    if (k < 0) return ring_pow(ring_invert(a), -k);
    RingElement r = RingElement::one(a.spec());
    RingElement base = a;
    long e = k;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// prod_i P_i^{exponents[i]}; negative exponents via inversion.
inline RingElement line_class(const RingSpec& spec, const std::vector<long>& exponents) {
    if (static_cast<int>(exponents.size()) != spec.vars())
        throw std::invalid_argument("line_class: exponent arity mismatch");
    RingElement r = RingElement::one(spec);
    for (int i = 0; i < spec.vars(); ++i)
        r = r * ring_pow(RingElement::gen_P(spec, i), exponents[static_cast<std::size_t>(i)]);
    return r;
}

// Adams operation psi^k: the ring endomorphism P_i -> P_i^k, Q-linear.
inline RingElement adams(long k, const RingElement& a) {
    if (k == 0) throw std::invalid_argument("adams: k must be nonzero");
    const RingSpec& spec = a.spec();
    std::vector<RingElement> psi_u;
    psi_u.reserve(static_cast<std::size_t>(spec.vars()));
    for (int i = 0; i < spec.vars(); ++i)
        psi_u.push_back(RingElement::one(spec) - ring_pow(RingElement::gen_P(spec, i), k));
    RingElement r = RingElement::zero(spec);
    for (const auto& [e, c] : a.terms()) {
        RingElement mono = RingElement::constant(spec, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) mono = mono * psi_u[i];
        r = r + mono;
    }
    return r;
}

} // namespace qk
