#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/parameters.hpp"

namespace qweyl {

/// (a_1, b_1, ..., a_n, b_n) for the ordered monomial y_1^a_1 x_1^b_1 ... y_n^a_n x_n^b_n.
using Exponents = std::vector<int>;

/// Finite linear combination of PBW monomials. Zero coefficients are never stored.
class AlgebraElement {
public:
    AlgebraElement(int n, std::int64_t order) : n_(n), order_(order) {}

    int n() const { return n_; }
    std::int64_t order() const { return order_; }
    const std::map<Exponents, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& m, const CycloNum& c) {
        if (m.size() != static_cast<std::size_t>(2 * n_)) throw InputError("monomial has wrong length");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    int total_degree() const {
        int best = 0;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (int e : m) d += e;
            best = std::max(best, d);
        }
        return best;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    AlgebraElement& operator*=(const CycloNum& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const CycloNum& s) { return a *= s; }
    friend AlgebraElement operator*(const CycloNum& s, AlgebraElement a) { return a *= s; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            for (int i = 0; i < n_; ++i) {
                auto put = [&](char g, int e) {
                    if (e == 0) return;
                    out += std::string("*") + g + std::to_string(i + 1);
                    if (e > 1) out += "^" + std::to_string(e);
                };
                put('y', m[static_cast<std::size_t>(2 * i)]);
                put('x', m[static_cast<std::size_t>(2 * i + 1)]);
            }
        }
        return out;
    }

private:
    int n_;
    std::int64_t order_;
    std::map<Exponents, CycloNum> terms_;
};

/// Generator of index i (1-based): y_i or x_i.
struct Generator {
    int index;
    bool is_x;
    std::string name() const { return std::string(is_x ? "x" : "y") + std::to_string(index); }
};

/// One checked identity: LHS - RHS computed exactly and compared with zero.
struct RelationCheck {
    std::string relation;
    bool pass;
    std::optional<std::size_t> witness_index;
};

/// Multiplication in either quantized Weyl algebra, in the ordered-monomial basis.
class WeylAlgebra {
public:
    WeylAlgebra(ParameterSet p, AlgebraKind kind) : p_(std::move(p)), kind_(kind) {
        const int n = p_.n();
        const std::int64_t L = p_.L();
        for (std::int64_t k = 0; k < L; ++k) roots_.push_back(make_root(L, k));
        pass_y_.assign(static_cast<std::size_t>(n + 1), std::vector<std::pair<std::int64_t, std::int64_t>>(
                                                           static_cast<std::size_t>(n + 1)));
        pass_x_ = pass_y_;
        for (int j = 1; j <= n; ++j) {
            const std::int64_t t = kind_ == AlgebraKind::maltsiniotis ? p_.q_exp(j) : 0;
            for (int s = j + 1; s <= n; ++s) {
                const std::int64_t u = p_.lambda_exp(j, s);
                // y_s y_j = lambda_js^-1 y_j y_s,  x_s y_j = q_j lambda_js y_j x_s
                pass_y_[j][s] = {-u, t + u};
                // y_s x_j = lambda_js x_j y_s,     x_s x_j = (q_j lambda_js)^-1 x_j x_s
                pass_x_[j][s] = {u, -t - u};
            }
        }
    }

    const ParameterSet& params() const { return p_; }
    AlgebraKind kind() const { return kind_; }
    int n() const { return p_.n(); }

    AlgebraElement zero() const { return AlgebraElement(n(), p_.L()); }
    AlgebraElement scalar(const CycloNum& c) const {
        AlgebraElement e = zero();
        e.add_term(Exponents(static_cast<std::size_t>(2 * n()), 0), c);
        return e;
    }
    AlgebraElement one() const { return scalar(p_.one()); }
    AlgebraElement monomial(const Exponents& m, const CycloNum& c) const {
        AlgebraElement e = zero();
        e.add_term(m, c);
        return e;
    }
    AlgebraElement generator(Generator g, int power = 1) const {
        p_.l(g.index);  // range check
        Exponents m(static_cast<std::size_t>(2 * n()), 0);
        m[static_cast<std::size_t>(2 * (g.index - 1) + (g.is_x ? 1 : 0))] = power;
        return monomial(m, p_.one());
    }
    AlgebraElement x(int i, int power = 1) const { return generator({i, true}, power); }
    AlgebraElement y(int i, int power = 1) const { return generator({i, false}, power); }

    std::vector<Generator> generators() const {
        std::vector<Generator> out;
        for (int i = 1; i <= n(); ++i) {
            out.push_back({i, true});
            out.push_back({i, false});
        }
        return out;
    }

    /// z_0 = 1; maltsiniotis z_i = 1 + sum_{k<=i} (q_k - 1) y_k x_k; alternative z_i = 1 + (q_i - 1) y_i x_i.
    AlgebraElement z(int i) const {
        if (i < 0 || i > n()) throw InputError("z index " + std::to_string(i) + " out of range 0.." + std::to_string(n()));
        AlgebraElement e = one();
        const int first = kind_ == AlgebraKind::maltsiniotis ? 1 : i;
        for (int k = std::max(first, 1); k <= i; ++k) {
            Exponents m(static_cast<std::size_t>(2 * n()), 0);
            m[static_cast<std::size_t>(2 * (k - 1))] = 1;
            m[static_cast<std::size_t>(2 * (k - 1) + 1)] = 1;
            e.add_term(m, p_.q(k) - p_.one());
        }
        return e;
    }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
        require_compatible(a);
        require_compatible(b);
        AlgebraElement result = zero();
        for (const auto& [mb, cb] : b.terms()) {
            AlgebraElement cur = a * cb;
            for (int i = 1; i <= n() && !cur.is_zero(); ++i) {
                for (int k = 0; k < mb[static_cast<std::size_t>(2 * (i - 1))]; ++k) cur = times_generator(cur, {i, false});
                for (int k = 0; k < mb[static_cast<std::size_t>(2 * (i - 1) + 1)]; ++k) cur = times_generator(cur, {i, true});
            }
            result += cur;
        }
        return result;
    }

    AlgebraElement power(const AlgebraElement& a, std::int64_t k) const {
        if (k < 0) throw InputError("negative power of an algebra element");
        AlgebraElement r = one();
        for (std::int64_t i = 0; i < k; ++i) r = multiply(r, a);
        return r;
    }

    AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const {
        return multiply(a, b) - multiply(b, a);
    }

    bool is_central(const AlgebraElement& e) const {
        for (const auto& g : generators())
            if (!commutator(e, generator(g)).is_zero()) return false;
        return true;
    }

    /// e * g for a single generator.
    AlgebraElement times_generator(const AlgebraElement& e, Generator g) const {
        AlgebraElement out = zero();
        for (const auto& [m, c] : e.terms()) monomial_times_generator(m, c, g, out);
        return out;
    }

private:
    void require_compatible(const AlgebraElement& e) const {
        if (e.n() != n() || e.order() != p_.L()) throw InputError("element belongs to a different algebra");
    }

    const CycloNum& root(std::int64_t k) const { return roots_[static_cast<std::size_t>(mod_floor(k, p_.L()))]; }

    /// Accumulates m * g into out. g is moved left past the factors of higher index, picking up
    /// a root-of-unity scalar, then merged with the y_j^a x_j^b block.
    void monomial_times_generator(const Exponents& m, const CycloNum& c, Generator g, AlgebraElement& out) const {
        const int j = g.index;
        const auto ya = static_cast<std::size_t>(2 * (j - 1));
        const auto xb = ya + 1;
        std::int64_t e = 0;
        const auto& table = g.is_x ? pass_x_ : pass_y_;
        for (int s = j + 1; s <= n(); ++s) {
            const auto [over_y, over_x] = table[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
            e += over_y * m[static_cast<std::size_t>(2 * (s - 1))] + over_x * m[static_cast<std::size_t>(2 * (s - 1) + 1)];
        }
        const CycloNum coeff = c * root(e);

        if (g.is_x) {
            Exponents r = m;
            ++r[xb];
            out.add_term(r, coeff);
            return;
        }

        // x^b y = q^b y x^b + [b]_q z_{j-1} x^{b-1}, and z_{j-1} commutes with y_j, x_j.
        const int b = m[xb];
        Exponents r = m;
        ++r[ya];
        out.add_term(r, coeff * root(p_.q_exp(j) * b));
        if (b == 0) return;

        const CycloNum bracket = q_integer(p_.q(j), b);
        Exponents tail = m;
        --tail[xb];
        if (kind_ == AlgebraKind::alternative || j == 1) {
            out.add_term(tail, coeff * bracket);
            return;
        }
        Exponents prefix(m.size(), 0);
        for (std::size_t k = 0; k < ya; ++k) prefix[k] = m[k];
        AlgebraElement head = multiply(monomial(prefix, coeff * bracket), z(j - 1));
        for (const auto& [hm, hc] : head.terms()) {
            Exponents joined = tail;
            for (std::size_t k = 0; k < ya; ++k) joined[k] = hm[k];
            out.add_term(joined, hc);
        }
    }

    ParameterSet p_;
    AlgebraKind kind_;
    std::vector<CycloNum> roots_;
    // ζ-exponents picked up when y_j (resp. x_j) passes (y_s, x_s), s > j.
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> pass_y_, pass_x_;
};

namespace detail {

inline std::string idx(int i) { return std::to_string(i); }

inline RelationCheck relation(const std::string& id, const AlgebraElement& diff) { return {id, diff.is_zero(), {}}; }

} // namespace detail

/// Checks every defining relation, the PBW form of each z_i, and the normality relations of z_i.
inline std::vector<RelationCheck> verify_relations(const WeylAlgebra& A) {
    using detail::idx;
    using detail::relation;
    const auto& p = A.params();
    const int n = p.n();
    const bool malt = A.kind() == AlgebraKind::maltsiniotis;
    std::vector<RelationCheck> out;
    auto mul = [&](const AlgebraElement& a, const AlgebraElement& b) { return A.multiply(a, b); };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::string ij = idx(i) + idx(j);
            const CycloNum lam = p.lambda(i, j);
            const CycloNum lam_inv = p.lambda(j, i);
            const CycloNum xx = malt ? p.q(i) * lam : lam;
            const CycloNum yx = malt ? inverse(p.q(i)) * lam_inv : lam_inv;
            out.push_back(relation("y" + idx(i) + " y" + idx(j) + " = lambda" + ij + " y" + idx(j) + " y" + idx(i),
                                   mul(A.y(i), A.y(j)) - lam * mul(A.y(j), A.y(i))));
            out.push_back(relation("x" + idx(i) + " x" + idx(j) + " = " + (malt ? "q" + idx(i) + " " : "") + "lambda" +
                                       ij + " x" + idx(j) + " x" + idx(i),
                                   mul(A.x(i), A.x(j)) - xx * mul(A.x(j), A.x(i))));
            out.push_back(relation("x" + idx(i) + " y" + idx(j) + " = lambda" + ij + "^-1 y" + idx(j) + " x" + idx(i),
                                   mul(A.x(i), A.y(j)) - lam_inv * mul(A.y(j), A.x(i))));
            out.push_back(relation("y" + idx(i) + " x" + idx(j) + " = " + (malt ? "q" + idx(i) + "^-1 " : "") +
                                       "lambda" + ij + "^-1 x" + idx(j) + " y" + idx(i),
                                   mul(A.y(i), A.x(j)) - yx * mul(A.x(j), A.y(i))));
        }

    for (int i = 1; i <= n; ++i) {
        const AlgebraElement rhs = malt ? A.z(i - 1) : A.one();
        out.push_back(relation("x" + idx(i) + " y" + idx(i) + " - q" + idx(i) + " y" + idx(i) + " x" + idx(i) + " = " +
                                   (malt ? "z" + idx(i - 1) : std::string("1")),
                               mul(A.x(i), A.y(i)) - p.q(i) * mul(A.y(i), A.x(i)) - rhs));
        out.push_back(relation("z" + idx(i) + " = x" + idx(i) + " y" + idx(i) + " - y" + idx(i) + " x" + idx(i),
                               A.commutator(A.x(i), A.y(i)) - A.z(i)));
    }

    for (int i = 1; i <= n; ++i) {
        const AlgebraElement zi = A.z(i);
        for (int j = 1; j <= n; ++j) {
            // Twisted when j <= i (maltsiniotis) or j == i (alternative); plain commuting otherwise.
            const bool twisted = malt ? j <= i : j == i;
            const CycloNum sx = twisted ? inverse(p.q(j)) : p.one();
            const CycloNum sy = twisted ? p.q(j) : p.one();
            const std::string zi_s = "z" + idx(i);
            out.push_back(relation(zi_s + " x" + idx(j) + " = " + (twisted ? "q" + idx(j) + "^-1 " : "") + "x" +
                                       idx(j) + " " + zi_s,
                                   mul(zi, A.x(j)) - sx * mul(A.x(j), zi)));
            out.push_back(relation(zi_s + " y" + idx(j) + " = " + (twisted ? "q" + idx(j) + " " : "") + "y" + idx(j) +
                                       " " + zi_s,
                                   mul(zi, A.y(j)) - sy * mul(A.y(j), zi)));
            if (j > i)
                out.push_back(relation(zi_s + " z" + idx(j) + " = z" + idx(j) + " " + zi_s, A.commutator(zi, A.z(j))));
        }
    }
    return out;
}

struct ZPowerIdentity {
    int index;
    bool holds;
    AlgebraElement lhs;
    AlgebraElement rhs;
};

/// z_i^{l_i} against z_{i-1}^{l_i} + q_i^{l_i(l_i-1)/2}(q_i-1)^{l_i} y_i^{l_i} x_i^{l_i}
/// (maltsiniotis) or 1 + ... (alternative).
inline ZPowerIdentity verify_z_power_identity(const WeylAlgebra& A, int i) {
    const auto& p = A.params();
    if (i < 1 || i > p.n()) throw InputError("z-power identity index out of range");
    const std::int64_t l = p.l(i);
    AlgebraElement lhs = A.power(A.z(i), l);
    AlgebraElement rhs = A.kind() == AlgebraKind::maltsiniotis ? A.power(A.z(i - 1), l) : A.one();
    const CycloNum c = p.root(p.q_exp(i) * (l * (l - 1) / 2)) * pow(p.q(i) - p.one(), l);
    Exponents m(static_cast<std::size_t>(2 * p.n()), 0);
    m[static_cast<std::size_t>(2 * (i - 1))] = static_cast<int>(l);
    m[static_cast<std::size_t>(2 * (i - 1) + 1)] = static_cast<int>(l);
    rhs += A.monomial(m, c);
    const bool holds = lhs == rhs;
    return {i, holds, std::move(lhs), std::move(rhs)};
}

} // namespace qweyl
