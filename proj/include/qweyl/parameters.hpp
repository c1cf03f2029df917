#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"

namespace qweyl {

enum class AlgebraKind { maltsiniotis, alternative };

inline std::string to_string(AlgebraKind kind) {
    return kind == AlgebraKind::maltsiniotis ? "maltsiniotis" : "alternative";
}

inline AlgebraKind parse_kind(const std::string& s) {
    if (s == "maltsiniotis") return AlgebraKind::maltsiniotis;
    if (s == "alternative") return AlgebraKind::alternative;
    throw InputError("unknown algebra kind '" + s + "'");
}

/// Unvalidated parameter data as read from a file. lambda_upper holds 1-based (i, j, u_ij) with i < j.
struct RawParameters {
    int n = 0;
    std::vector<std::int64_t> l;
    std::vector<std::int64_t> q_exp;
    std::vector<std::tuple<int, int, std::int64_t>> lambda_upper;
};

/// Defining multiparameters q_i = zeta_L^{t_i}, lambda_ij = zeta_L^{u_ij} with L = l_n.
/// Construct through validate(); every instance satisfies the root-of-unity assumptions.
class ParameterSet {
public:
    int n() const { return n_; }
    std::int64_t L() const { return L_; }
    /// l_i, 1-based.
    std::int64_t l(int i) const { return l_.at(static_cast<std::size_t>(check(i) - 1)); }
    const std::vector<std::int64_t>& orders() const { return l_; }
    /// Exponent t_i in [0, L).
    std::int64_t q_exp(int i) const { return t_.at(static_cast<std::size_t>(check(i) - 1)); }
    /// Exponent u_ij in [0, L); u_ii = 0 and u_ji = -u_ij mod L.
    std::int64_t lambda_exp(int i, int j) const {
        return u_[static_cast<std::size_t>(check(i) - 1)][static_cast<std::size_t>(check(j) - 1)];
    }

    const CyclotomicField& field() const { return CyclotomicField::get(L_); }
    CycloNum root(std::int64_t k) const { return make_root(L_, k); }
    CycloNum one() const { return CycloNum::one(L_); }
    CycloNum zero() const { return CycloNum::zero(L_); }

    CycloNum q(int i) const { return root(q_exp(i)); }
    CycloNum lambda(int i, int j) const { return root(lambda_exp(i, j)); }

    std::int64_t product_of_orders() const {
        std::int64_t p = 1;
        for (auto v : l_) p *= v;
        return p;
    }

    RawParameters raw() const {
        RawParameters r{n_, l_, t_, {}};
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) r.lambda_upper.emplace_back(i, j, lambda_exp(i, j));
        return r;
    }

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

private:
    friend ParameterSet validate(const RawParameters& raw);

    int check(int i) const {
        if (i < 1 || i > n_) throw InputError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
        return i;
    }

    int n_ = 0;
    std::int64_t L_ = 1;
    std::vector<std::int64_t> l_;
    std::vector<std::int64_t> t_;
    std::vector<std::vector<std::int64_t>> u_;
};

/// Checks the root-of-unity assumptions, reporting the first violated clause in the order:
/// shapes, l_i >= 2, divisibility chain, orders of q_i, lambda conditions.
inline ParameterSet validate(const RawParameters& raw) {
    const int n = raw.n;
    if (n < 1) throw InputError("malformed parameters: n must be positive");
    if (raw.l.size() != static_cast<std::size_t>(n))
        throw InputError("malformed parameters: l must have n entries");
    if (raw.q_exp.size() != static_cast<std::size_t>(n))
        throw InputError("malformed parameters: q_exp must have n entries");
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (const auto& [i, j, u] : raw.lambda_upper) {
        if (i < 1 || j > n || i >= j)
            throw InputError("malformed parameters: lambda entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") must satisfy 1 <= i < j <= n");
        if (seen[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)])
            throw InputError("malformed parameters: duplicate lambda entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
        seen[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = true;
    }

    for (int i = 0; i < n; ++i)
        if (raw.l[static_cast<std::size_t>(i)] < 2)
            throw InputError("l_" + std::to_string(i + 1) + " must be at least 2 (q_i is neither 0 nor 1)");

    for (int i = 0; i + 1 < n; ++i)
        if (raw.l[static_cast<std::size_t>(i + 1)] % raw.l[static_cast<std::size_t>(i)] != 0)
            throw InputError("divisibility chain violated: l_" + std::to_string(i + 1) + " does not divide l_" +
                             std::to_string(i + 2));

    const std::int64_t L = raw.l.back();
    ParameterSet p;
    p.n_ = n;
    p.L_ = L;
    p.l_ = raw.l;
    for (int i = 0; i < n; ++i) {
        std::int64_t t = mod_floor(raw.q_exp[static_cast<std::size_t>(i)], L);
        if (L / std::gcd(t, L) != raw.l[static_cast<std::size_t>(i)])
            throw InputError("q_" + std::to_string(i + 1) + " is not a primitive l_" + std::to_string(i + 1) +
                             "-th root of unity");
        p.t_.push_back(t);
    }

    p.u_.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (const auto& [i, j, u] : raw.lambda_upper) {
        std::int64_t v = mod_floor(u, L);
        if ((raw.l[static_cast<std::size_t>(i - 1)] * v) % L != 0)
            throw InputError("lambda_" + std::to_string(i) + std::to_string(j) + " not an l_" + std::to_string(i) +
                             "-th root of unity");
        p.u_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        p.u_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = mod_floor(-v, L);
    }
    return p;
}

enum class PresetCase { A, B };

/// Uniparameter families: (A) q_1 = ... = q_n = q and lambda_ij = 1;
/// (B) q_i = q^2 and lambda_ij = q^{-1} for i < j, with ord(q) odd.
inline RawParameters preset(PresetCase which, int n, std::int64_t ord) {
    if (n < 1) throw InputError("preset needs n >= 1");
    RawParameters raw;
    raw.n = n;
    raw.l.assign(static_cast<std::size_t>(n), ord);
    if (which == PresetCase::A) {
        if (ord < 2) throw InputError("preset (A) needs ord(q) >= 2");
        raw.q_exp.assign(static_cast<std::size_t>(n), 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) raw.lambda_upper.emplace_back(i, j, 0);
    } else {
        if (ord < 3 || ord % 2 == 0) throw InputError("preset (B) needs odd ord(q) >= 3");
        raw.q_exp.assign(static_cast<std::size_t>(n), 2);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) raw.lambda_upper.emplace_back(i, j, ord - 1);
    }
    return raw;
}

} // namespace qweyl
