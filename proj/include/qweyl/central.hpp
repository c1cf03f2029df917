#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/exact_matrix.hpp"
#include "qweyl/parameters.hpp"
#include "qweyl/simple_modules.hpp"
#include "qweyl/weyl_algebra.hpp"

namespace qweyl {

/// A maximal ideal <x_i^{l_i} - alpha_i, y_i^{l_i} - beta_i> of the center.
struct CentralPoint {
    std::vector<CycloNum> alpha;
    std::vector<CycloNum> beta;
};

struct CenterGenerator {
    std::string name;
    AlgebraElement element;
    // [g, element] for every generator g; all zero when central
    std::vector<std::pair<std::string, AlgebraElement>> commutators;
    bool central;
};

/// x_i^{l_i} and y_i^{l_i}, each checked against all generators.
inline std::vector<CenterGenerator> center_generators(const WeylAlgebra& A) {
    std::vector<CenterGenerator> out;
    const auto& p = A.params();
    for (int i = 1; i <= p.n(); ++i) {
        const int l = static_cast<int>(p.l(i));
        for (bool is_x : {true, false}) {
            CenterGenerator g{std::string(is_x ? "x" : "y") + std::to_string(i) + "^" + std::to_string(l),
                              A.generator({i, is_x}, l), {}, true};
            for (const auto& gen : A.generators()) {
                AlgebraElement c = A.commutator(g.element, A.generator(gen));
                g.central = g.central && c.is_zero();
                g.commutators.emplace_back(gen.name(), std::move(c));
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

/// q_i^{l_i(l_i-1)/2} (q_i - 1)^{l_i}
inline CycloNum character_coefficient(const ParameterSet& p, int i) {
    const std::int64_t l = p.l(i);
    return p.root(p.q_exp(i) * (l * (l - 1) / 2)) * pow(p.q(i) - p.one(), l);
}

inline void check_point(const ParameterSet& p, const CentralPoint& pt) {
    if (pt.alpha.size() != static_cast<std::size_t>(p.n()) || pt.beta.size() != static_cast<std::size_t>(p.n()))
        throw InputError("central point needs n values of alpha and beta");
    for (const auto* v : {&pt.alpha, &pt.beta})
        for (const auto& c : *v)
            if (c.order() != p.L()) throw InputError("central point values must lie in Q(zeta_L)");
}

/// chi(z_i^{l_i}) for i = 1..n.
inline std::vector<CycloNum> central_character(const ParameterSet& p, const CentralPoint& pt, AlgebraKind kind) {
    check_point(p, pt);
    std::vector<CycloNum> chi;
    CycloNum prev = p.one();
    std::int64_t prev_l = 1;
    for (int i = 1; i <= p.n(); ++i) {
        const CycloNum ab = pt.beta[static_cast<std::size_t>(i - 1)] * pt.alpha[static_cast<std::size_t>(i - 1)];
        // chi(z_{i-1}^{l_i}) is a power of chi(z_{i-1}^{l_{i-1}}) because l_{i-1} | l_i.
        const CycloNum base = kind == AlgebraKind::maltsiniotis ? pow(prev, p.l(i) / prev_l) : p.one();
        chi.push_back(base + character_coefficient(p, i) * ab);
        prev = chi.back();
        prev_l = p.l(i);
    }
    return chi;
}

inline bool is_azumaya_point(const ParameterSet& p, const CentralPoint& pt, AlgebraKind kind) {
    for (const auto& c : central_character(p, pt, kind))
        if (c.is_zero()) return false;
    return true;
}

namespace detail {

/// Polynomial in p_k = alpha_k beta_k: exponent vector -> coefficient.
using CharPoly = std::map<std::vector<int>, CycloNum>;

inline CharPoly poly_mul(const CharPoly& a, const CharPoly& b) {
    CharPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto it = out.find(e);
            if (it == out.end()) out.emplace(e, ca * cb);
            else it->second += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline std::string poly_string(const CharPoly& poly) {
    std::string s;
    for (const auto& [e, c] : poly) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "(alpha" + std::to_string(k + 1) + "*beta" + std::to_string(k + 1) + ")";
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string term = mono.empty() ? c.to_string() : (c.is_one() ? mono : "(" + c.to_string() + ")*" + mono);
        s = s.empty() ? term : s + " + " + term;
    }
    return s.empty() ? "0" : s;
}

} // namespace detail

/// The defining inequations chi(z_i^{l_i}) != 0 of the Azumaya locus, expanded in alpha_k beta_k.
inline std::vector<std::string> azumaya_inequations(const ParameterSet& p, AlgebraKind kind) {
    const auto n = static_cast<std::size_t>(p.n());
    std::vector<std::string> out;
    detail::CharPoly prev{{std::vector<int>(n, 0), p.one()}};
    std::int64_t prev_l = 1;
    for (int i = 1; i <= p.n(); ++i) {
        detail::CharPoly cur{{std::vector<int>(n, 0), p.one()}};
        if (kind == AlgebraKind::maltsiniotis)
            for (std::int64_t k = 0; k < p.l(i) / prev_l; ++k) cur = detail::poly_mul(cur, prev);
        std::vector<int> e(n, 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        detail::CharPoly lin{{e, character_coefficient(p, i)}};
        for (const auto& [m, c] : lin) {
            auto it = cur.find(m);
            if (it == cur.end()) cur.emplace(m, c);
            else if ((it->second += c).is_zero()) cur.erase(it);
        }
        out.push_back("chi" + std::to_string(i) + " = " + detail::poly_string(cur) + " != 0");
        prev = std::move(cur);
        prev_l = p.l(i);
    }
    return out;
}

/// rho(z_i)^{l_i} equals chi(z_i^{l_i}) times the identity, with (alpha, beta) read off the representation.
inline bool character_consistency(const ParameterSet& p, const Representation& rep, AlgebraKind kind) {
    EigenData ed;
    try {
        ed = extract_eigendata(p, rep);
    } catch (const VerificationError&) {
        return false;
    }
    const auto chi = central_character(p, CentralPoint{ed.alpha, ed.beta}, kind);
    for (int i = 1; i <= p.n(); ++i) {
        const Matrix lhs = matrix_power(z_matrix(rep, i), p.l(i));
        if (lhs != Matrix::scalar(rep.dim(), chi[static_cast<std::size_t>(i - 1)])) return false;
    }
    return true;
}

} // namespace qweyl
