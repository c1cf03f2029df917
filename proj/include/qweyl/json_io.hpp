#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qweyl/central.hpp"
#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/int_matrix.hpp"
#include "qweyl/parameters.hpp"
#include "qweyl/pi_degree.hpp"
#include "qweyl/simple_modules.hpp"
#include "qweyl/weyl_algebra.hpp"

namespace qweyl::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline Rational parse_rational(const json& j) {
    Rational r;
    if (j.is_number_integer()) {
        r = Rational(j.get<std::int64_t>());
    } else if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || r.set_str(s, 10) != 0)
            throw InputError("'" + s + "' is not a rational of the form p/q");
        if (sgn(r.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
    } else {
        throw InputError("rational must be an integer or a \"p/q\" string");
    }
    r.canonicalize();
    return r;
}

inline json rational_to_json(const Rational& r) { return r.get_str(); }

inline json cyclo_to_json(const CycloNum& c) {
    json coeffs = json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(rational_to_json(v));
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

/// Accepts {order, coeffs}, {order, zeta_pow[, scale]} or a bare rational, then embeds into Q(zeta_L).
inline CycloNum cyclo_from_json(const json& j, std::int64_t L) {
    if (!j.is_object()) return CycloNum::rational(L, parse_rational(j));
    if (!j.contains("order") || !j["order"].is_number_integer()) throw InputError("field element needs an integer 'order'");
    const auto order = j["order"].get<std::int64_t>();
    if (order < 1) throw InputError("field element order must be positive");
    if (L % order != 0)
        throw InputError("field element of order " + std::to_string(order) + " does not lie in Q(zeta_" +
                         std::to_string(L) + ")");
    CycloNum value;
    if (j.contains("coeffs")) {
        const auto& cs = j["coeffs"];
        const auto& field = CyclotomicField::get(order);
        if (!cs.is_array() || cs.size() != field.degree())
            throw InputError("'coeffs' must hold exactly phi(order) = " + std::to_string(field.degree()) + " entries");
        RationalPoly poly;
        for (const auto& c : cs) poly.push_back(parse_rational(c));
        value = CycloNum(field, std::move(poly));
    } else if (j.contains("zeta_pow")) {
        if (!j["zeta_pow"].is_number_integer()) throw InputError("'zeta_pow' must be an integer");
        value = make_root(order, j["zeta_pow"].get<std::int64_t>());
        if (j.contains("scale")) value *= parse_rational(j["scale"]);
    } else {
        throw InputError("field element needs 'coeffs' or 'zeta_pow'");
    }
    return embed(value, L);
}

inline std::vector<CycloNum> cyclo_list_from_json(const json& j, std::int64_t L, const std::string& what) {
    if (!j.is_array()) throw InputError("'" + what + "' must be an array");
    std::vector<CycloNum> out;
    for (const auto& v : j) out.push_back(cyclo_from_json(v, L));
    return out;
}

inline json cyclo_list_to_json(const std::vector<CycloNum>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(cyclo_to_json(c));
    return a;
}

inline RawParameters raw_parameters_from_json(const json& j) {
    if (!j.is_object()) throw InputError("malformed parameters: expected a JSON object");
    RawParameters raw;
    try {
        raw.n = j.at("n").get<int>();
        raw.l = j.at("l").get<std::vector<std::int64_t>>();
        raw.q_exp = j.at("q_exp").get<std::vector<std::int64_t>>();
        if (j.contains("lambda_exp_upper"))
            for (const auto& t : j["lambda_exp_upper"]) {
                if (!t.is_array() || t.size() != 3) throw InputError("malformed parameters: lambda entries are [i, j, u]");
                raw.lambda_upper.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<std::int64_t>());
            }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed parameters: ") + e.what());
    }
    for (auto v : raw.l)
        if (v > 1000) throw InputError("malformed parameters: l_i above 1000 is not supported");
    return raw;
}

inline json parameters_to_json(const ParameterSet& p) {
    json lam = json::array();
    for (const auto& [i, j, u] : p.raw().lambda_upper) lam.push_back({i, j, u});
    return {{"n", p.n()}, {"l", p.orders()}, {"q_exp", p.raw().q_exp}, {"lambda_exp_upper", lam}};
}

inline json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(integer_to_json(m(i, c)));
        rows.push_back(r);
    }
    return rows;
}

inline json skew_matrix_to_json(const IntSkewMat& h) { return {{"size", h.size()}, {"rows", int_matrix_to_json(h.matrix())}}; }

inline json pi_degree_report_to_json(const PiDegreeReport& r) {
    json factors = json::array();
    for (const auto& f : r.normal_form.factors) factors.push_back(integer_to_json(f));
    return {{"factors", factors},
            {"kernel_dim", r.normal_form.kernel_dim},
            {"transform", int_matrix_to_json(r.normal_form.transform)},
            {"pi_degree", integer_to_json(r.pi_degree)},
            {"oracle_cardinality", integer_to_json(r.oracle_cardinality)}};
}

inline json element_to_json(const AlgebraElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) terms.push_back({{"exps", m}, {"coeff", cyclo_to_json(c)}});
    return {{"n", e.n()}, {"terms", terms}};
}

inline json checks_to_json(const std::vector<RelationCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks) {
        json o = {{"relation", c.relation}, {"pass", c.pass}};
        if (c.witness_index) o["witness_index"] = *c.witness_index;
        a.push_back(o);
    }
    return a;
}

inline ModuleSpec module_spec_from_json(const json& j, const ParameterSet& p) {
    if (!j.is_object()) throw InputError("module spec must be a JSON object");
    ModuleSpec s;
    try {
        for (int i : j.at("I").get<std::vector<int>>())
            if (!s.I.insert(i).second) throw InputError("duplicate entry in I");
        for (int i : j.at("J").get<std::vector<int>>())
            if (!s.J.insert(i).second) throw InputError("duplicate entry in J");
        s.mu = cyclo_list_from_json(j.at("mu"), p.L(), "mu");
        s.gamma = cyclo_list_from_json(j.at("gamma"), p.L(), "gamma");
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed module spec: ") + e.what());
    }
    return s;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(cyclo_to_json(m(i, c)));
        rows.push_back(r);
    }
    return rows;
}

inline json representation_to_json(const Representation& rep) {
    json xs = json::array(), ys = json::array();
    for (const auto& m : rep.x) xs.push_back(matrix_to_json(m));
    for (const auto& m : rep.y) ys.push_back(matrix_to_json(m));
    return {{"dim", rep.dim()}, {"radix", rep.radix}, {"x", xs}, {"y", ys}};
}

inline Matrix matrix_from_json(const json& j, std::size_t d, std::int64_t L) {
    if (!j.is_array() || j.size() != d) throw InputError("matrix must have " + std::to_string(d) + " rows");
    Matrix m(d, d, L);
    for (std::size_t r = 0; r < d; ++r) {
        if (!j[r].is_array() || j[r].size() != d) throw InputError("matrix rows must have " + std::to_string(d) + " entries");
        for (std::size_t c = 0; c < d; ++c) m(r, c) = cyclo_from_json(j[r][c], L);
    }
    return m;
}

inline Representation representation_from_json(const json& j, const ParameterSet& p) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("dim"))
        throw InputError("representation needs 'dim', 'x' and 'y'");
    Representation rep;
    rep.radix = p.orders();
    std::size_t d = 0;
    try {
        d = j.at("dim").get<std::size_t>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed representation: ") + e.what());
    }
    if (d == 0) throw InputError("representation dimension must be positive");
    if (!j["x"].is_array() || !j["y"].is_array() || j["x"].size() != static_cast<std::size_t>(p.n()) ||
        j["y"].size() != static_cast<std::size_t>(p.n()))
        throw InputError("representation needs one x and one y matrix per index");
    for (const auto& m : j["x"]) rep.x.push_back(matrix_from_json(m, d, p.L()));
    for (const auto& m : j["y"]) rep.y.push_back(matrix_from_json(m, d, p.L()));
    return rep;
}

inline CentralPoint central_point_from_json(const json& j, const ParameterSet& p) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
        throw InputError("central point must be an object with 'alpha' and 'beta'");
    return {cyclo_list_from_json(j["alpha"], p.L(), "alpha"), cyclo_list_from_json(j["beta"], p.L(), "beta")};
}

inline json central_point_to_json(const CentralPoint& pt) {
    return {{"alpha", cyclo_list_to_json(pt.alpha)}, {"beta", cyclo_list_to_json(pt.beta)}};
}

} // namespace qweyl::io
