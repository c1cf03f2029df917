#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qweyl/json_io.hpp"

namespace qweyl::cli {

using io::json;

enum ExitCode : int { ok = 0, input_error = 1, verification_error = 2, io_error = 3 };

struct Options {
    std::string params;
    std::string spec;
    std::string rep;
    std::string point;
    std::string out;
    std::string kind = "maltsiniotis";
    std::optional<int> factor;
    std::uint64_t seed = 0;
    int max_degree = 64;
    bool to_alternative = false;
};

namespace detail {

inline ParameterSet load_params(const Options& o) {
    if (o.params.empty()) throw InputError("--params is required");
    return validate(io::raw_parameters_from_json(io::read_json_file(o.params)));
}

inline void require_degree(int needed, const Options& o) {
    if (needed > o.max_degree)
        throw InputError("computation needs total degree " + std::to_string(needed) + ", above --max-degree " +
                         std::to_string(o.max_degree));
}

inline std::int64_t max_order(const ParameterSet& p) {
    return *std::max_element(p.orders().begin(), p.orders().end());
}

/// Random element with up to three terms of total degree <= 2 and small integer coefficients.
inline AlgebraElement random_element(const WeylAlgebra& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3), slot(0, 2 * A.n() - 1), deg(0, 2);
    std::uniform_int_distribution<std::int64_t> root_exp(0, A.params().L() - 1);
    AlgebraElement e = A.zero();
    for (int t = nterms(rng); t > 0; --t) {
        Exponents m(static_cast<std::size_t>(2 * A.n()), 0);
        for (int d = deg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
        e.add_term(m, A.params().root(root_exp(rng)) * Rational(coeff(rng)));
    }
    return e;
}

inline int cmd_validate(const Options& o, json& out) {
    try {
        auto p = load_params(o);
        out = {{"valid", true}, {"L", p.L()}, {"parameters", io::parameters_to_json(p)}};
        return ok;
    } catch (const InputError& e) {
        out = {{"valid", false}, {"error", e.what()}};
        return input_error;
    }
}

inline int cmd_pidegree(const Options& o, json& out) {
    auto p = load_params(o);
    const auto kind = parse_kind(o.kind);
    const auto h = weyl_exponent_matrix(p, kind, o.factor);
    const auto report = pi_degree_report(h, p.L());
    out = io::pi_degree_report_to_json(report);
    out["kind"] = to_string(kind);
    out["factor"] = o.factor ? json(*o.factor) : json(nullptr);
    out["modulus"] = p.L();
    out["matrix"] = io::skew_matrix_to_json(h);
    return ok;
}

inline int cmd_relations(const Options& o, json& out) {
    auto p = load_params(o);
    require_degree(6, o);
    WeylAlgebra A(p, parse_kind(o.kind));
    const auto checks = verify_relations(A);

    std::mt19937_64 rng(o.seed);
    constexpr int samples = 20;
    int assoc_pass = 0;
    for (int k = 0; k < samples; ++k) {
        auto a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
        if (A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c))) ++assoc_pass;
    }
    const bool pass = all_pass(checks) && assoc_pass == samples;
    out = {{"kind", to_string(A.kind())},
           {"relations", io::checks_to_json(checks)},
           {"associativity", {{"seed", o.seed}, {"samples", samples}, {"passed", assoc_pass}}},
           {"all_pass", pass}};
    return pass ? ok : verification_error;
}

inline int cmd_zidentity(const Options& o, json& out) {
    auto p = load_params(o);
    require_degree(static_cast<int>(2 * max_order(p)), o);
    WeylAlgebra A(p, parse_kind(o.kind));
    json ids = json::array();
    bool pass = true;
    for (int i = 1; i <= p.n(); ++i) {
        auto r = verify_z_power_identity(A, i);
        pass = pass && r.holds;
        ids.push_back({{"i", i}, {"holds", r.holds}, {"lhs", io::element_to_json(r.lhs)}, {"rhs", io::element_to_json(r.rhs)}});
    }
    out = {{"kind", to_string(A.kind())}, {"identities", ids}, {"all_hold", pass}};
    return pass ? ok : verification_error;
}

inline int cmd_center(const Options& o, json& out) {
    auto p = load_params(o);
    require_degree(static_cast<int>(max_order(p)) + 1, o);
    WeylAlgebra A(p, parse_kind(o.kind));
    json gens = json::array();
    bool pass = true;
    for (const auto& g : center_generators(A)) {
        json comm = json::array();
        for (const auto& [name, value] : g.commutators)
            comm.push_back({{"generator", name}, {"commutator", io::element_to_json(value)}});
        gens.push_back({{"name", g.name}, {"element", io::element_to_json(g.element)}, {"central", g.central}, {"commutators", comm}});
        pass = pass && g.central;
    }
    out = {{"kind", to_string(A.kind())}, {"generators", gens}, {"all_central", pass}};
    return pass ? ok : verification_error;
}

inline int cmd_azumaya(const Options& o, json& out) {
    auto p = load_params(o);
    if (o.point.empty()) throw InputError("--point is required");
    const auto kind = parse_kind(o.kind);
    const auto pt = io::central_point_from_json(io::read_json_file(o.point), p);
    const auto chi = central_character(p, pt, kind);
    out = {{"kind", to_string(kind)},
           {"point", io::central_point_to_json(pt)},
           {"chi", io::cyclo_list_to_json(chi)},
           {"azumaya", is_azumaya_point(p, pt, kind)},
           {"inequations", azumaya_inequations(p, kind)}};
    return ok;
}

inline json module_report(const ParameterSet& p, const Representation& rep, AlgebraKind kind, bool& pass) {
    const auto checks = verify_module(p, rep, kind);
    json r = {{"kind", to_string(kind)}, {"representation", io::representation_to_json(rep)}, {"verification", io::checks_to_json(checks)}};
    if (!all_pass(checks)) {
        pass = false;
        return r;
    }
    const auto span = burnside_span_dimension(rep);
    json torsion = json::array();
    for (auto t : torsion_profile(rep)) torsion.push_back(to_string(t));
    const auto ed = extract_eigendata(p, rep);
    json spectrum = json::array();
    for (const auto& s : ed.zeta_spectrum) spectrum.push_back(io::cyclo_list_to_json(s));
    const bool consistent = character_consistency(p, rep, kind);
    r["dimension"] = rep.dim();
    r["span_dimension"] = span;
    r["simple"] = span == rep.dim() * rep.dim();
    r["torsion"] = torsion;
    r["eigendata"] = {{"alpha", io::cyclo_list_to_json(ed.alpha)},
                      {"beta", io::cyclo_list_to_json(ed.beta)},
                      {"zeta", io::cyclo_list_to_json(ed.zeta)},
                      {"zeta_spectrum", spectrum},
                      {"canonical", ed.canonical}};
    r["character_consistent"] = consistent;
    pass = pass && consistent && span == rep.dim() * rep.dim();
    return r;
}

inline int cmd_module(const Options& o, json& out) {
    auto p = load_params(o);
    if (o.spec.empty() == o.rep.empty()) throw InputError("exactly one of --spec and --rep is required");
    const auto kind = parse_kind(o.kind);
    bool pass = true;
    if (!o.rep.empty()) {
        // A supplied representation is only checked, never transported.
        const auto rep = io::representation_from_json(io::read_json_file(o.rep), p);
        out = module_report(p, rep, kind, pass);
        out["all_pass"] = pass;
        return pass ? ok : verification_error;
    }
    if (kind != AlgebraKind::maltsiniotis && !o.to_alternative)
        throw InputError("modules are constructed for the maltsiniotis algebra; use --to-alternative to transport");
    const auto rep = construct_module(p, io::module_spec_from_json(io::read_json_file(o.spec), p));
    out = module_report(p, rep, AlgebraKind::maltsiniotis, pass);
    out["pi_degree"] = io::integer_to_json(pi_degree(weyl_exponent_matrix(p, AlgebraKind::maltsiniotis), p.L()));
    if (o.to_alternative && pass) {
        const auto alt = to_alternative(rep);
        json a = module_report(p, alt, AlgebraKind::alternative, pass);
        const bool round_trip = from_alternative(alt) == rep;
        a["round_trip"] = round_trip;
        pass = pass && round_trip;
        out["alternative"] = a;
    }
    out["all_pass"] = pass;
    return pass ? ok : verification_error;
}

} // namespace detail

/// Runs one CLI invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact kernel for multiparameter quantized Weyl algebras at roots of unity", "qweyl"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--params", o.params, "parameter JSON file")->required();
        sub->add_option("--kind", o.kind, "algebra kind")->check(CLI::IsMember({"maltsiniotis", "alternative"}));
        sub->add_option("--out", o.out, "write the report here instead of stdout");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        sub->add_option("--max-degree", o.max_degree, "refuse element arithmetic above this total degree");
    };
    auto* validate_cmd = app.add_subcommand("validate", "check parameters against the root-of-unity assumptions");
    auto* pideg = app.add_subcommand("pidegree", "PI degree with normal-form certificate");
    auto* rel = app.add_subcommand("relations", "verify defining and normality relations");
    auto* mod = app.add_subcommand("module", "construct and verify a simple module");
    auto* azu = app.add_subcommand("azumaya", "central character and Azumaya membership of a point");
    auto* cen = app.add_subcommand("center", "center generators with centrality witnesses");
    auto* zid = app.add_subcommand("zidentity", "z-power identity for every index");
    for (auto* s : {validate_cmd, pideg, rel, mod, azu, cen, zid}) common(s);
    pideg->add_option("--factor", o.factor, "zero the r-th diagonal block (prime factor by z_r)");
    auto* spec_opt = mod->add_option("--spec", o.spec, "module spec JSON file");
    mod->add_option("--rep", o.rep, "verify this representation JSON instead of constructing one")->excludes(spec_opt);
    mod->add_flag("--to-alternative", o.to_alternative, "also transport to the alternative algebra");
    azu->add_option("--point", o.point, "central point JSON file")->required();

    std::vector<std::string> argv_store{"qweyl"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    json report;
    int code = ok;
    try {
        if (*validate_cmd) code = detail::cmd_validate(o, report);
        else if (*pideg) code = detail::cmd_pidegree(o, report);
        else if (*rel) code = detail::cmd_relations(o, report);
        else if (*mod) code = detail::cmd_module(o, report);
        else if (*azu) code = detail::cmd_azumaya(o, report);
        else if (*cen) code = detail::cmd_center(o, report);
        else code = detail::cmd_zidentity(o, report);
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return io_error;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const DivisionByZero& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_error;
    }

    const std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << text)) {
            err << "io error: cannot write '" << o.out << "'\n";
            return io_error;
        }
    }
    if (code == input_error) err << "input error: " << report.value("error", std::string("invalid input")) << "\n";
    if (code == verification_error) err << "verification failed: see report\n";
    return code;
}

} // namespace qweyl::cli
