#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfunction.hpp"

namespace qk {

// Truncated formal series over the Novikov ring: a finite map from effective
// multidegrees to QFunction coefficients, with per-variable (two-sided)
// truncation bounds.
class NovikovSeries {
public:
    using Degree = std::vector<int>;
    using CoeffMap = std::map<Degree, QFunction>;

    NovikovSeries() : spec_{{1}} {}

    NovikovSeries(RingSpec spec, std::vector<std::pair<int, int>> trunc)
        : spec_(std::move(spec)), trunc_(std::move(trunc)) {
        spec_.validate();
        for (const auto& [lo, hi] : trunc_)
            if (lo > hi) throw std::invalid_argument("empty truncation range");
    }

    int vars() const { return static_cast<int>(trunc_.size()); }
    const RingSpec& spec() const { return spec_; }
    const std::vector<std::pair<int, int>>& trunc() const { return trunc_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool in_bounds(const Degree& d) const {
        if (d.size() != trunc_.size()) return false;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] < trunc_[i].first || d[i] > trunc_[i].second) return false;
        return true;
    }

    QFunction coeff(const Degree& d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? QFunction::zero(spec_) : it->second;
    }

    // Degrees outside the truncation box are silently dropped.
    void set_coeff(const Degree& d, const QFunction& f) {
        if (static_cast<int>(d.size()) != vars())
            throw std::invalid_argument("multidegree arity mismatch");
        if (!in_bounds(d)) return;
        if (f.is_zero())
            coeffs_.erase(d);
        else
            coeffs_[d] = f;
    }

    void add_coeff(const Degree& d, const QFunction& f) { set_coeff(d, coeff(d) + f); }

    NovikovSeries operator+(const NovikovSeries& o) const {
        if (!(spec_ == o.spec_) || trunc_ != o.trunc_)
            throw std::invalid_argument("series shape mismatch");
        NovikovSeries r = *this;
        for (const auto& [d, c] : o.coeffs_) r.add_coeff(d, c);
        return r;
    }

    bool equal_coefficients(const NovikovSeries& o) const {
        for (const auto& [d, c] : coeffs_)
            if (!qf_equal(c, o.coeff(d))) return false;
        for (const auto& [d, c] : o.coeffs_)
            if (coeffs_.find(d) == coeffs_.end() && !c.is_zero()) return false;
        return true;
    }

private:
    RingSpec spec_;
    std::vector<std::pair<int, int>> trunc_;
    CoeffMap coeffs_;
};

// Applies a per-degree transform coefficient-wise; truncation unchanged.
inline NovikovSeries series_map(
    const NovikovSeries& s,
    const std::function<QFunction(const NovikovSeries::Degree&, const QFunction&)>& f) {
    NovikovSeries r(s.spec(), s.trunc());
    for (const auto& [d, c] : s.coeffs()) r.set_coeff(d, f(d, c));
    return r;
}

// psi^k on series: coefficient of k*d is qf_adams(k, coefficient of d);
// degrees beyond the truncation box are dropped.
inline NovikovSeries series_adams(long k, const NovikovSeries& s) {
    if (k < 1) throw std::invalid_argument("series_adams: k must be >= 1");
    NovikovSeries r(s.spec(), s.trunc());
    for (const auto& [d, c] : s.coeffs()) {
        NovikovSeries::Degree kd(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) kd[i] = d[i] * static_cast<int>(k);
        if (r.in_bounds(kd)) r.set_coeff(kd, qf_adams(k, c));
    }
    return r;
}

} // namespace qk
