#pragma once

// Shared fixtures for the unit tests and the acceptance binary: parameter grids, random
// scalars and an independent word-rewriting model of the algebras.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "qweyl/qweyl.hpp"

namespace qweyl::fixtures {

/// Divisibility chains l_1 | ... | l_n with 2 <= l_i and l_n <= max_l.
inline std::vector<std::vector<std::int64_t>> chains(int n, std::int64_t max_l) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t prev) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t l = prev; l <= max_l; l += prev) {
            if (l < 2) continue;
            cur.push_back(l);
            self(self, l);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Exponents t with zeta_L^t of exact order l.
inline std::vector<std::int64_t> primitive_exponents(std::int64_t L, std::int64_t l) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 0; t < L; ++t)
        if (L / std::gcd(t, L) == l) out.push_back(t);
    return out;
}

/// Every valid parameter set on a chain (all q exponents, all admissible lambda exponents).
inline std::vector<ParameterSet> all_parameter_sets(const std::vector<std::int64_t>& l) {
    const int n = static_cast<int>(l.size());
    const std::int64_t L = l.back();
    std::vector<std::vector<std::int64_t>> t_choices;
    for (auto li : l) t_choices.push_back(primitive_exponents(L, li));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

    std::vector<ParameterSet> out;
    RawParameters raw{n, l, std::vector<std::int64_t>(static_cast<std::size_t>(n)), {}};
    auto rec_u = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            out.push_back(validate(raw));
            return;
        }
        const auto [i, j] = pairs[k];
        const std::int64_t step = L / l[static_cast<std::size_t>(i - 1)];
        for (std::int64_t u = 0; u < L; u += step) {
            raw.lambda_upper.emplace_back(i, j, u);
            self(self, k + 1);
            raw.lambda_upper.pop_back();
        }
    };
    auto rec_t = [&](auto&& self, std::size_t i) -> void {
        if (i == static_cast<std::size_t>(n)) {
            rec_u(rec_u, 0);
            return;
        }
        for (auto t : t_choices[i]) {
            raw.q_exp[i] = t;
            self(self, i + 1);
        }
    };
    rec_t(rec_t, 0);
    return out;
}

/// Deterministic grid for the theorem checks: presets (A) and (B) plus, per chain with
/// n <= 3 and l_n <= 12, a spread of q and lambda choices.
inline std::vector<ParameterSet> theorem_grid() {
    std::vector<ParameterSet> out;
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t ord = 2; ord <= 6; ++ord) out.push_back(validate(preset(PresetCase::A, n, ord)));
        for (std::int64_t ord : {3, 5, 7, 9, 11}) out.push_back(validate(preset(PresetCase::B, n, ord)));
        for (const auto& l : chains(n, 12)) {
            auto all = all_parameter_sets(l);
            // first, last and a middle representative keep the grid small but varied
            out.push_back(all.front());
            if (all.size() > 1) out.push_back(all.back());
            if (all.size() > 2) out.push_back(all[all.size() / 2]);
        }
    }
    return out;
}

inline CycloNum random_cyclo(std::mt19937_64& rng, std::int64_t L, int spread = 5) {
    const auto& field = CyclotomicField::get(L);
    std::uniform_int_distribution<int> num(-spread, spread), den(1, spread);
    RationalPoly c;
    for (std::size_t k = 0; k < field.degree(); ++k) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(r);
    }
    return CycloNum(field, c);
}

inline CycloNum random_nonzero_cyclo(std::mt19937_64& rng, std::int64_t L) {
    for (;;) {
        CycloNum c = random_cyclo(rng, L);
        if (!c.is_zero()) return c;
    }
}

/// zeta^k * r with r a nonzero rational: nonzero and cheap to invert.
inline CycloNum random_unit_times_rational(std::mt19937_64& rng, std::int64_t L) {
    std::uniform_int_distribution<std::int64_t> k(0, L - 1);
    std::uniform_int_distribution<int> num(1, 4), den(1, 3), sign(0, 1);
    Rational r(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    r.canonicalize();
    return make_root(L, k(rng)) * r;
}

inline AlgebraElement random_element(const WeylAlgebra& A, std::mt19937_64& rng, int max_degree = 2, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_degree), slot(0, 2 * A.n() - 1);
    AlgebraElement e = A.zero();
    for (int t = nterms(rng); t > 0; --t) {
        Exponents m(static_cast<std::size_t>(2 * A.n()), 0);
        for (int d = deg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
        e.add_term(m, random_unit_times_rational(rng, A.params().L()));
    }
    return e;
}

/// Products computed by rewriting words of generators with the defining relations only.
/// Generator code 2(i-1) is y_i and 2(i-1)+1 is x_i; a word is sorted iff it is a PBW monomial.
class WordModel {
public:
    using Word = std::vector<int>;

    WordModel(const ParameterSet& p, AlgebraKind kind) : p_(p), kind_(kind) {}

    static Word word_of(const Exponents& m) {
        Word w;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (int e = 0; e < m[k]; ++e) w.push_back(static_cast<int>(k));
        return w;
    }

    /// Normal form of a word; `leftmost` picks which out-of-order pair is rewritten first.
    AlgebraElement normal_form(const Word& start, const CycloNum& coeff, bool leftmost) const {
        std::map<Word, CycloNum> pending{{start, coeff}};
        AlgebraElement result(p_.n(), p_.L());
        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const Word w = node.key();
            const CycloNum c = node.mapped();
            if (c.is_zero()) continue;
            std::optional<std::size_t> pos;
            for (std::size_t k = 0; k + 1 < w.size(); ++k)
                if (w[k] > w[k + 1]) {
                    pos = k;
                    if (leftmost) break;
                }
            if (!pos) {
                Exponents m(static_cast<std::size_t>(2 * p_.n()), 0);
                for (int g : w) ++m[static_cast<std::size_t>(g)];
                result.add_term(m, c);
                continue;
            }
            for (const auto& [replacement, s] : rewrite(w[*pos], w[*pos + 1])) {
                Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
                nw.insert(nw.end(), replacement.begin(), replacement.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
                auto it = pending.find(nw);
                if (it == pending.end()) pending.emplace(nw, c * s);
                else it->second += c * s;
            }
        }
        return result;
    }

    AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b, bool leftmost = true) const {
        AlgebraElement out(p_.n(), p_.L());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                Word w = word_of(ma);
                Word wb = word_of(mb);
                w.insert(w.end(), wb.begin(), wb.end());
                out += normal_form(w, ca * cb, leftmost);
            }
        return out;
    }

private:
    /// Rewrites the out-of-order pair (a, b), a > b, as a combination of words.
    std::vector<std::pair<Word, CycloNum>> rewrite(int a, int b) const {
        const bool malt = kind_ == AlgebraKind::maltsiniotis;
        const int ia = a / 2 + 1, ib = b / 2 + 1;
        const bool ax = a % 2 == 1, bx = b % 2 == 1;
        if (ia == ib) {
            // x_i y_i = q_i y_i x_i + (z_{i-1} in PBW form, or 1)
            std::vector<std::pair<Word, CycloNum>> out{{Word{b, a}, p_.q(ia)}, {Word{}, p_.one()}};
            if (malt)
                for (int k = 1; k < ia; ++k) out.push_back({Word{2 * (k - 1), 2 * (k - 1) + 1}, p_.q(k) - p_.one()});
            return out;
        }
        // Relation for i = ib < j = ia reads  g_i h_j = c h_j g_i, hence h_j g_i = c^{-1} g_i h_j.
        const int i = ib, j = ia;
        CycloNum c = p_.one();
        if (!bx && !ax) c = p_.lambda(i, j);                                                 // y_i y_j
        if (bx && ax) c = malt ? p_.q(i) * p_.lambda(i, j) : p_.lambda(i, j);              // x_i x_j
        if (bx && !ax) c = inverse(p_.lambda(i, j));                                        // x_i y_j
        if (!bx && ax) c = malt ? inverse(p_.q(i) * p_.lambda(i, j)) : inverse(p_.lambda(i, j));  // y_i x_j
        return {{Word{b, a}, inverse(c)}};
    }

    ParameterSet p_;
    AlgebraKind kind_;
};

/// ModuleSpec for membership pattern bits (bit 2(i-1): i in I, bit 2(i-1)+1: i in J) with random
/// admissible mu and gamma.
inline ModuleSpec random_module_spec(const ParameterSet& p, unsigned pattern, std::mt19937_64& rng) {
    ModuleSpec s;
    const int n = p.n();
    for (int i = 1; i <= n; ++i) {
        if (pattern >> (2 * (i - 1)) & 1u) s.I.insert(i);
        if (pattern >> (2 * (i - 1) + 1) & 1u) s.J.insert(i);
    }
    CycloNum prev = p.one();
    for (int i = 1; i <= n; ++i) {
        const bool in_I = s.I.count(i) > 0;
        s.mu.push_back(in_I && s.J.count(i) ? p.zero() : random_unit_times_rational(rng, p.L()));
        CycloNum g = in_I ? inverse(p.q(i)) * prev : random_unit_times_rational(rng, p.L());
        s.gamma.push_back(g);
        prev = g;
    }
    return s;
}

/// Parameter sets used for the module suites, one per order pattern. The chain (2, 3) is not a
/// divisibility chain, so (2, 6) stands in for it.
inline std::vector<ParameterSet> module_grid() {
    return {validate(RawParameters{2, {2, 2}, {1, 1}, {{1, 2, 1}}}),
            validate(RawParameters{2, {2, 4}, {2, 1}, {{1, 2, 2}}}),
            validate(RawParameters{2, {3, 3}, {1, 2}, {{1, 2, 1}}}),
            validate(RawParameters{2, {2, 6}, {3, 1}, {{1, 2, 3}}})};
}

} // namespace qweyl::fixtures
