// qkgw: exact genus-zero quantum K-theory series, invariant extraction, and
// operator-identity verification for complete intersections and toric
// fibrations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qk/ifunctions.hpp"
#include "qk/invariants.hpp"
#include "qk/json_io.hpp"
#include "qk/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string config_path;
    std::string in_path;
    std::string out_path;
    std::string format = "json";
};

qk::Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open input file: " + path);
    qk::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const CommonOpts& opts, const qk::Json& doc, const std::string& text) {
    std::string payload = opts.format == "text" ? text : doc.dump(2) + "\n";
    if (opts.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write output file: " + opts.out_path);
        out << payload;
    }
}

qk::Json meta_block(const std::string& command) {
    return qk::Json{{"tool", "qkgw"}, {"version", kVersion}, {"command", command}};
}

std::string series_text(const qk::NovikovSeries& s) {
    std::ostringstream os;
    os << "ring orders:";
    for (int o : s.spec().orders) os << " " << o;
    os << "\n";
    for (const auto& [d, c] : s.coeffs()) {
        os << "Q^(";
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << "): " << qk::qfunction_str(c) << "\n";
    }
    return os.str();
}

qk::Json geometry_json(int N, const std::vector<int>& degrees, int trunc) {
    return qk::Json{{"N", N}, {"degrees", degrees}, {"trunc", trunc}};
}

std::vector<int> parse_degree_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

int run_series_command(const CommonOpts& opts, const std::string& command, int N,
                       const std::string& degrees_str, int trunc) {
    std::vector<int> degrees =
        command == "jfun" ? std::vector<int>{} : parse_degree_list(degrees_str);
    qk::GeometrySpec g{N, degrees, trunc};
    g.validate();
    qk::NovikovSeries s = qk::i_complete_intersection(g);
    qk::Json doc{{"meta", meta_block(command)},
                 {"geometry", geometry_json(N, degrees, trunc)},
                 {"series", qk::series_to_json(s)}};
    emit(opts, doc, series_text(s));
    return 0;
}

int run_split(const CommonOpts& opts) {
    qk::Json in = load_json_file(opts.in_path.empty() ? opts.config_path : opts.in_path);
    qk::NovikovSeries s = qk::series_from_json(in.at("series"));
    qk::Json degrees = qk::Json::array();
    std::ostringstream text;
    for (const auto& [d, c] : s.coeffs()) {
        qk::SplitResult sp = qk::split_polarization(c);
        degrees.push_back(qk::Json::array(
            {d, qk::Json{{"plus", qk::laurent_to_json(sp.plus)},
                         {"minus", qk::qfunction_to_json(sp.minus)}}}));
        text << "Q^(";
        for (std::size_t i = 0; i < d.size(); ++i) text << (i ? "," : "") << d[i];
        text << ") minus: " << qk::qfunction_str(sp.minus) << "\n";
    }
    qk::Json doc{{"meta", meta_block("split")},
                 {"spec", qk::ring_spec_to_json(s.spec())},
                 {"split", degrees}};
    if (in.contains("geometry")) doc["geometry"] = in.at("geometry");
    emit(opts, doc, text.str());
    return 0;
}

qk::Json invariants_doc(const qk::OnePointResult& r, std::string& text_out) {
    qk::Json table = qk::Json::array();
    std::ostringstream text;
    for (int a = 0; a <= r.dim; ++a) {
        const qk::QFunction& inv = r.invariants[static_cast<std::size_t>(a)];
        qk::Rational at0 = qk::qf_eval_q0(inv).scalar_part();
        std::string cls = a == 0 ? "1" : (a == 1 ? "P" : "P^" + std::to_string(a));
        table.push_back(qk::Json{{"class", cls},
                                 {"invariant", qk::qfunction_to_json(inv)},
                                 {"invariant_str", qk::qfunction_str(inv)},
                                 {"at_q0", qk::rat_str(at0)}});
        text << cls << "\t" << qk::qfunction_str(inv) << "\tq=0: " << qk::rat_str(at0)
             << "\n";
    }
    text_out = text.str();
    return qk::Json{{"meta", meta_block("invariants")},
                    {"geometry", geometry_json(r.N, r.degrees, 1)},
                    {"minus", qk::qfunction_to_json(r.minus)},
                    {"table", table}};
}

int run_invariants(const CommonOpts& opts, int N, const std::string& degrees_str) {
    qk::OnePointResult r;
    if (!opts.in_path.empty()) {
        // consume a `split` artifact: extract from its stored minus part
        qk::Json in = load_json_file(opts.in_path);
        if (!in.contains("geometry"))
            throw CLI::ValidationError("split input lacks geometry metadata");
        r.N = in.at("geometry").at("N").get<int>();
        r.degrees = in.at("geometry").at("degrees").get<std::vector<int>>();
        r.dim = r.N - static_cast<int>(r.degrees.size());
        qk::RingSpec spec = qk::ring_spec_from_json(in.at("spec"));
        bool found = false;
        for (const auto& entry : in.at("split")) {
            std::vector<int> d = entry.at(0).get<std::vector<int>>();
            if (d == std::vector<int>{1}) {
                r.minus = qk::qfunction_from_json(entry.at(1).at("minus"), spec);
                found = true;
            }
        }
        if (!found) throw CLI::ValidationError("split input has no degree-1 entry");
        for (int a = 0; a <= r.dim; ++a)
            r.invariants.push_back(qk::pair_minus_against(r.minus, r.N, r.degrees, a));
    } else {
        r = qk::one_point_degree_one(N, parse_degree_list(degrees_str));
    }
    std::string text;
    qk::Json doc = invariants_doc(r, text);
    emit(opts, doc, text);
    return 0;
}

int run_toric(const CommonOpts& opts) {
    qk::Json cfg = load_json_file(opts.config_path);
    qk::ToricFibrationSpec t;
    try {
        t.ring = qk::ring_spec_from_json(cfg.at("ring"));
        t.fiber_vars = cfg.at("fiber_vars").get<int>();
        t.m_matrix = cfg.at("m_matrix").get<std::vector<std::vector<int>>>();
        t.l_dual_exponents = cfg.at("l_dual_exponents").get<std::vector<std::vector<long>>>();
        t.c1_pairing = cfg.at("c1_pairing").get<std::vector<std::vector<long>>>();
        for (const auto& b : cfg.at("fiber_trunc"))
            t.fiber_trunc.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
        if (cfg.contains("base_series"))
            t.base_series = qk::series_from_json(cfg.at("base_series"));
        else
            t.base_series = qk::ToricFibrationSpec::point_base(t.ring);
        t.validate();
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("invalid toric config: ") + e.what());
    }
    qk::NovikovSeries s = qk::i_toric_fibration(t);
    qk::Json doc{{"meta", meta_block("toric")}, {"series", qk::series_to_json(s)}};
    emit(opts, doc, series_text(s));
    return 0;
}

int run_verify(const CommonOpts& opts, const std::string& suites_str,
               const std::string& k_str, int order) {
    std::vector<std::string> suites;
    {
        std::stringstream ss(suites_str);
        std::string item;
        while (std::getline(ss, item, ',')) suites.push_back(item);
    }
    qk::VerifyOptions vopt;
    if (!k_str.empty()) {
        vopt.k_list.clear();
        for (int k : parse_degree_list(k_str)) vopt.k_list.push_back(k);
    }
    vopt.order = order;
    std::vector<qk::CheckResult> results = qk::run_verify_suites(suites, vopt);
    bool all_ok = true;
    qk::Json checks = qk::Json::array();
    std::ostringstream text;
    for (const auto& c : results) {
        all_ok = all_ok && c.passed;
        checks.push_back(qk::Json{{"name", c.name}, {"passed", c.passed}});
        text << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "\n";
    }
    text << (all_ok ? "all checks passed" : "FAILURES present") << "\n";
    qk::Json doc{{"meta", meta_block("verify")}, {"checks", checks}, {"all_passed", all_ok}};
    emit(opts, doc, text.str());
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum K-theory series and invariants"};
    app.require_subcommand(1);

    CommonOpts opts;
    int N = 4;
    int trunc = 1;
    std::string degrees = "5";
    std::string suites = "all";
    std::string k_list;
    int order = 8;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "config file (JSON)");
        sub->add_option("--in", opts.in_path, "input artifact (JSON)");
        sub->add_option("--out", opts.out_path, "output path (default stdout)");
        sub->add_option("--format", opts.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* jfun = app.add_subcommand("jfun", "J-function of P^N");
    add_common(jfun);
    jfun->add_option("--N", N, "projective space dimension");
    jfun->add_option("--trunc", trunc, "Novikov truncation");

    CLI::App* ifun = app.add_subcommand("ifun", "I-function of a complete intersection");
    add_common(ifun);
    ifun->add_option("--N", N, "ambient projective space dimension");
    ifun->add_option("--degrees", degrees, "comma-separated bundle degrees");
    ifun->add_option("--trunc", trunc, "Novikov truncation");

    CLI::App* inv = app.add_subcommand("invariants", "one-point degree-one invariants");
    add_common(inv);
    inv->add_option("--N", N, "ambient projective space dimension");
    inv->add_option("--degrees", degrees, "comma-separated bundle degrees");
    inv->add_option("--trunc", trunc, "Novikov truncation (degree 1 is extracted)");

    CLI::App* split = app.add_subcommand("split", "polarization split of a series");
    add_common(split);

    CLI::App* toric = app.add_subcommand("toric", "toric fibration I-function");
    add_common(toric);

    CLI::App* verify = app.add_subcommand("verify", "operator-identity verification");
    add_common(verify);
    verify->add_option("--suite", suites,
                       "comma-separated: gamma,em,mobius,poles,toric,lefschetz-equiv,all");
    verify->add_option("--k", k_list, "comma-separated root orders");
    verify->add_option("--order", order, "series order for gamma/em checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (jfun->parsed()) return run_series_command(opts, "jfun", N, "", trunc);
        if (ifun->parsed()) return run_series_command(opts, "ifun", N, degrees, trunc);
        if (inv->parsed()) return run_invariants(opts, N, degrees);
        if (split->parsed()) return run_split(opts);
        if (toric->parsed()) return run_toric(opts);
        if (verify->parsed()) return run_verify(opts, suites, k_list, order);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "qkgw: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qkgw: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
