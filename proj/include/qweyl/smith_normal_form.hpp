#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qweyl/int_matrix.hpp"

namespace qweyl {

/// Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix (rank many, all positive).
/// Row and column operations only; no transforms are kept.
inline std::vector<Integer> smith_diagonal(IntMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Integer> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (sgn(a(i, j)) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
                        best = {i, j};
            if (!best) return diag;
            a.swap_rows(t, best->first);
            a.swap_cols(t, best->second);

            const Integer pivot = a(t, t);
            bool leftover = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
                a.add_row(i, t, Integer(-q));
                leftover = leftover || sgn(a(i, t)) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
                a.add_col(j, t, Integer(-q));
                leftover = leftover || sgn(a(t, j)) != 0;
            }
            if (leftover) continue;

            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                        a.add_row(t, i, Integer(1));
                        fixed = true;
                    }
            if (fixed) continue;

            diag.push_back(abs(pivot));
            break;
        }
    }
    return diag;
}

} // namespace qweyl
