#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/int_matrix.hpp"

namespace qweyl {

/// transform * H * transform^T = diag([[0,h_1],[-h_1,0]], ..., [[0,h_s],[-h_s,0]], 0_kernelDim).
struct SkewNormalForm {
    IntMatrix transform;
    std::vector<Integer> factors;
    std::size_t kernel_dim = 0;

    /// The block-diagonal matrix the transform is claimed to produce.
    IntMatrix block_diagonal() const {
        const std::size_t n = transform.rows();
        IntMatrix d(n, n);
        for (std::size_t k = 0; k < factors.size(); ++k) {
            d(2 * k, 2 * k + 1) = factors[k];
            d(2 * k + 1, 2 * k) = -factors[k];
        }
        return d;
    }
};

namespace detail {

/// Congruence operations on a skew matrix, mirrored onto the accumulated transform.
struct CongruenceWorkspace {
    IntMatrix a;
    IntMatrix w;

    void swap(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
        w.swap_rows(i, j);
    }
    /// basis vector dst += c * basis vector src
    void add(std::size_t dst, std::size_t src, const Integer& c) {
        if (sgn(c) == 0) return;
        a.add_row(dst, src, c);
        a.add_col(dst, src, c);
        w.add_row(dst, src, c);
    }
};

} // namespace detail

/// Skew normal form by repeated pivoting on the entry of least absolute value. The pivot is
/// only accepted once it divides every entry of the trailing block, so h_k | h_{k+1} holds.
inline SkewNormalForm skew_normal_form(const IntSkewMat& h) {
    const std::size_t n = h.size();
    detail::CongruenceWorkspace ws{h.matrix(), IntMatrix::identity(n)};
    std::vector<Integer> factors;

    std::size_t k = 0;
    while (k + 1 < n) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (sgn(ws.a(i, j)) == 0) continue;
                if (!best || abs(ws.a(i, j)) < abs(ws.a(best->first, best->second))) best = {i, j};
            }
        if (!best) break;

        auto [i, j] = *best;
        ws.swap(k, i);
        ws.swap(k + 1, j);
        if (sgn(ws.a(k, k + 1)) < 0) ws.swap(k, k + 1);
        const Integer p = ws.a(k, k + 1);

        bool remainder = false;
        for (std::size_t m = k + 2; m < n; ++m) {
            Integer c;
            // (m, k) += c * (k+1, k) = -c p
            mpz_fdiv_q(c.get_mpz_t(), ws.a(m, k).get_mpz_t(), p.get_mpz_t());
            ws.add(m, k + 1, c);
            // (m, k+1) += c * (k, k+1) = c p
            mpz_fdiv_q(c.get_mpz_t(), ws.a(m, k + 1).get_mpz_t(), p.get_mpz_t());
            ws.add(m, k, Integer(-c));
            remainder = remainder || sgn(ws.a(m, k)) != 0 || sgn(ws.a(m, k + 1)) != 0;
        }
        if (remainder) continue;

        bool fixed = false;
        for (std::size_t r = k + 2; r < n && !fixed; ++r)
            for (std::size_t c = r + 1; c < n && !fixed; ++c)
                if (!mpz_divisible_p(ws.a(r, c).get_mpz_t(), p.get_mpz_t())) {
                    ws.add(k, r, Integer(1));
                    fixed = true;
                }
        if (fixed) continue;

        factors.push_back(p);
        k += 2;
    }

    SkewNormalForm out;
    out.transform = std::move(ws.w);
    out.kernel_dim = n - 2 * factors.size();
    out.factors = std::move(factors);
    return out;
}

/// Re-checks every claim of a normal form against the input matrix. Empty string when valid.
inline std::string check_skew_normal_form(const IntSkewMat& h, const SkewNormalForm& nf) {
    const std::size_t n = h.size();
    if (nf.transform.rows() != n || nf.transform.cols() != n) return "transform has wrong shape";
    if (2 * nf.factors.size() + nf.kernel_dim != n) return "factor count and kernel dimension do not add up";
    Integer det = determinant(nf.transform);
    if (det != 1 && det != -1) return "transform is not unimodular";
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
        if (sgn(nf.factors[k]) <= 0) return "non-positive invariant factor";
        if (k + 1 < nf.factors.size() && !mpz_divisible_p(nf.factors[k + 1].get_mpz_t(), nf.factors[k].get_mpz_t()))
            return "invariant factors do not form a divisibility chain";
    }
    if (nf.transform * h.matrix() * nf.transform.transpose() != nf.block_diagonal())
        return "W H W^T differs from the block-diagonal form";
    return {};
}

} // namespace qweyl
