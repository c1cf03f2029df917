#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/int_matrix.hpp"
#include "qweyl/parameters.hpp"
#include "qweyl/skew_normal_form.hpp"
#include "qweyl/smith_normal_form.hpp"

namespace qweyl {

/// zeta_L-exponents of the commutation scalars of the derivation-erased algebra, in generator
/// order (y_1, x_1, ..., y_n, x_n). Entry (a, b) is h with g_a g_b = zeta^h g_b g_a.
/// With `factor` = r the (r, r) block is zeroed (the relation x_r y_r = y_r x_r).
inline IntSkewMat weyl_exponent_matrix(const ParameterSet& p, AlgebraKind kind, std::optional<int> factor = {}) {
    const int n = p.n();
    if (factor && (*factor < 1 || *factor > n))
        throw InputError("factor index " + std::to_string(*factor) + " out of range 1.." + std::to_string(n));
    IntSkewMat h = IntSkewMat::zero(static_cast<std::size_t>(2 * n));
    auto y = [](int i) { return static_cast<std::size_t>(2 * (i - 1)); };
    auto x = [](int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); };
    for (int i = 1; i <= n; ++i) {
        const Integer t = p.q_exp(i);
        if (!factor || *factor != i) h.set(y(i), x(i), Integer(-t));
        const Integer tq = kind == AlgebraKind::maltsiniotis ? t : Integer(0);
        for (int j = i + 1; j <= n; ++j) {
            const Integer u = p.lambda_exp(i, j);
            h.set(y(i), y(j), u);
            h.set(y(i), x(j), Integer(-tq - u));
            h.set(x(i), y(j), Integer(-u));
            h.set(x(i), x(j), Integer(tq + u));
        }
    }
    return h;
}

/// |image of Z^N -> (Z/m)^N, v -> H v| from the Smith invariants.
inline Integer image_cardinality_smith(const IntMatrix& h, const Integer& m) {
    if (m < 1) throw InputError("modulus must be positive");
    Integer card = 1;
    for (const auto& d : smith_diagonal(h)) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        card *= m / g;
    }
    return card;
}

/// Counts distinct values of H v mod m over all m^N residue classes v.
inline Integer image_cardinality_enumerated(const IntMatrix& h, std::int64_t m) {
    const std::size_t n = h.cols();
    std::vector<std::int64_t> v(n, 0);
    std::set<std::vector<std::int64_t>> seen;
    for (;;) {
        std::vector<std::int64_t> out(h.rows(), 0);
        for (std::size_t r = 0; r < h.rows(); ++r) {
            Integer acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc += h(r, c) * v[c];
            out[r] = static_cast<std::int64_t>(mpz_fdiv_ui(acc.get_mpz_t(), static_cast<unsigned long>(m)));
        }
        seen.insert(out);
        std::size_t k = 0;
        while (k < n && ++v[k] == m) v[k++] = 0;
        if (k == n) break;
    }
    return static_cast<long>(seen.size());
}

/// Image cardinality with the enumeration cross-check applied at small size (N <= 4, m <= 6).
inline Integer image_cardinality(const IntSkewMat& h, const Integer& m) {
    Integer card = image_cardinality_smith(h.matrix(), m);
    if (h.size() <= 4 && m <= 6) {
        Integer brute = image_cardinality_enumerated(h.matrix(), m.get_si());
        if (brute != card)
            throw VerificationError("image cardinality mismatch: smith " + card.get_str() + ", enumeration " +
                                    brute.get_str());
    }
    return card;
}

struct PiDegreeReport {
    SkewNormalForm normal_form;
    Integer pi_degree;
    Integer oracle_cardinality;
};

/// PI degree prod m / gcd(h_k, m) over the skew invariant factors, with the normal-form
/// certificate re-checked and the square compared against the independent image count.
inline PiDegreeReport pi_degree_report(const IntSkewMat& h, const Integer& m) {
    if (m < 1) throw InputError("modulus must be positive");
    PiDegreeReport rep;
    rep.normal_form = skew_normal_form(h);
    if (auto why = check_skew_normal_form(h, rep.normal_form); !why.empty())
        throw VerificationError("skew normal form certificate failed: " + why);
    rep.pi_degree = 1;
    for (const auto& f : rep.normal_form.factors) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
        rep.pi_degree *= m / g;
    }
    rep.oracle_cardinality = image_cardinality(h, m);
    if (rep.pi_degree * rep.pi_degree != rep.oracle_cardinality)
        throw VerificationError("pi degree " + rep.pi_degree.get_str() + " squared differs from image cardinality " +
                                rep.oracle_cardinality.get_str());
    return rep;
}

inline Integer pi_degree(const IntSkewMat& h, const Integer& m) { return pi_degree_report(h, m).pi_degree; }

} // namespace qweyl
