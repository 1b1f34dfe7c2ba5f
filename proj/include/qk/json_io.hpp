#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qfunction.hpp"
#include "series.hpp"

namespace qk {

using Json = nlohmann::json;

// All rationals travel as exact strings "p/q" (or "p" when q = 1).

inline Json ring_spec_to_json(const RingSpec& s) { return Json(s.orders); }

inline RingSpec ring_spec_from_json(const Json& j) {
    RingSpec s;
    s.orders = j.get<std::vector<int>>();
    s.validate();
    return s;
}

// {"spec":[n1+1,...], "terms":[[[a1,...,aK],"p/q"],...]}
inline Json ring_element_to_json(const RingElement& e) {
    Json terms = Json::array();
    for (const auto& [ex, c] : e.terms()) terms.push_back(Json::array({ex, rat_str(c)}));
    return Json{{"spec", e.spec().orders}, {"terms", terms}};
}

inline RingElement ring_element_from_json(const Json& j) {
    RingElement e(ring_spec_from_json(j.at("spec")));
    for (const auto& t : j.at("terms"))
        e.add_term(t.at(0).get<std::vector<int>>(), rat_parse(t.at(1).get<std::string>()));
    return e;
}

// {"num":[[e, ringElem],...], "den":[[ringElem, r, m],...]}
inline Json qfunction_to_json(const QFunction& f) {
    Json num = Json::array();
    for (const auto& [e, c] : f.num()) num.push_back(Json::array({e, ring_element_to_json(c)}));
    Json den = Json::array();
    for (const auto& d : f.den())
        den.push_back(Json::array({ring_element_to_json(d.unit), d.power, d.mult}));
    return Json{{"num", num}, {"den", den}};
}

inline QFunction qfunction_from_json(const Json& j, const RingSpec& spec) {
    Laurent num;
    for (const auto& t : j.at("num"))
        num[t.at(0).get<int>()] = ring_element_from_json(t.at(1));
    QFunction f = QFunction::from_laurent(spec, std::move(num));
    for (const auto& d : j.at("den"))
        f.push_den(DenFactor{ring_element_from_json(d.at(0)), d.at(1).get<int>(),
                             d.at(2).get<int>()});
    return f;
}

// {"vars":K, "trunc":[[lo,hi],...], "spec":[...], "coeffs":[[[d1,...],QFunction],...]}
inline Json series_to_json(const NovikovSeries& s) {
    Json trunc = Json::array();
    for (const auto& [lo, hi] : s.trunc()) trunc.push_back(Json::array({lo, hi}));
    Json coeffs = Json::array();
    for (const auto& [d, c] : s.coeffs())
        coeffs.push_back(Json::array({d, qfunction_to_json(c)}));
    return Json{{"vars", s.vars()},
                {"trunc", trunc},
                {"spec", ring_spec_to_json(s.spec())},
                {"coeffs", coeffs}};
}

inline NovikovSeries series_from_json(const Json& j) {
    RingSpec spec = ring_spec_from_json(j.at("spec"));
    std::vector<std::pair<int, int>> trunc;
    for (const auto& t : j.at("trunc"))
        trunc.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
    NovikovSeries s(spec, trunc);
    for (const auto& c : j.at("coeffs"))
        s.set_coeff(c.at(0).get<std::vector<int>>(), qfunction_from_json(c.at(1), spec));
    return s;
}

inline Json laurent_to_json(const Laurent& l) {
    Json out = Json::array();
    for (const auto& [e, c] : l) out.push_back(Json::array({e, ring_element_to_json(c)}));
    return out;
}

inline Laurent laurent_from_json(const Json& j) {
    Laurent l;
    for (const auto& t : j) l[t.at(0).get<int>()] = ring_element_from_json(t.at(1));
    return l;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline std::string ring_element_str(const RingElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ex, c] : e.terms()) {
        bool trivial_mono = true;
        for (int a : ex)
            if (a != 0) trivial_mono = false;
        std::string coeff = rat_str(c);
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        std::string mag = rat_str(c < 0 ? -c : c);
        if (mag != "1" || trivial_mono) os << mag;
        if (!trivial_mono && mag != "1") os << "*";
        if (!trivial_mono) {
            bool firstvar = true;
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (ex[i] == 0) continue;
                if (!firstvar) os << "*";
                os << "u" << (ex.size() > 1 ? std::to_string(i + 1) : "");
                if (ex[i] > 1) os << "^" << ex[i];
                firstvar = false;
            }
        }
        first = false;
    }
    return os.str();
}

inline std::string qfunction_str(const QFunction& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool paren_num = f.num().size() > 1 && !f.den().empty();
    if (paren_num) os << "(";
    bool first = true;
    for (const auto& [e, c] : f.num()) {
        std::string cs = ring_element_str(c);
        bool composite = cs.find(' ') != std::string::npos;
        if (!first) os << " + ";
        if (e == 0) {
            os << cs;
        } else {
            os << (composite ? "(" + cs + ")" : cs) << "*q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    if (paren_num) os << ")";
    for (const auto& d : f.den()) {
        std::string us = ring_element_str(d.unit);
        bool composite = us.find(' ') != std::string::npos || us != "1";
        os << " / (1 - " << (us == "1" ? "" : (composite ? "(" + us + ")*" : us + "*"))
           << "q";
        if (d.power != 1) os << "^" << d.power;
        os << ")";
        if (d.mult != 1) os << "^" << d.mult;
    }
    return os.str();
}

} // namespace qk
