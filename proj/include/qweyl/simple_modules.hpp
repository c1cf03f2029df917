#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/exact_matrix.hpp"
#include "qweyl/parameters.hpp"
#include "qweyl/weyl_algebra.hpp"

namespace qweyl {

/// Data (I, J, mu, gamma) selecting one z-torsionfree simple module. Indices are 1-based; gamma_0 = 1.
struct ModuleSpec {
    std::set<int> I;
    std::set<int> J;
    std::vector<CycloNum> mu;
    std::vector<CycloNum> gamma;
};

/// Right-module action: basis vectors are rows and v.(gh) = (v.g).h, so rho(gh) = rho(g) rho(h).
struct Representation {
    std::vector<std::int64_t> radix;
    std::vector<Matrix> x;  // x[i-1] = rho(x_i)
    std::vector<Matrix> y;

    int n() const { return static_cast<int>(radix.size()); }
    std::size_t dim() const { return x.empty() ? 0 : x.front().rows(); }
    std::int64_t order() const { return x.empty() ? 1 : x.front().order(); }
    const Matrix& X(int i) const { return x.at(static_cast<std::size_t>(i - 1)); }
    const Matrix& Y(int i) const { return y.at(static_cast<std::size_t>(i - 1)); }

    std::vector<Matrix> generator_matrices() const {
        std::vector<Matrix> g;
        for (std::size_t i = 0; i < x.size(); ++i) {
            g.push_back(x[i]);
            g.push_back(y[i]);
        }
        return g;
    }

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Big-endian mixed radix: e(a) has index sum_i a_i prod_{j>i} l_j.
inline std::size_t basis_index(const std::vector<std::int64_t>& radix, const std::vector<std::int64_t>& a) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) idx = idx * static_cast<std::size_t>(radix[i]) + static_cast<std::size_t>(a[i]);
    return idx;
}

inline std::vector<std::int64_t> basis_label(const std::vector<std::int64_t>& radix, std::size_t idx) {
    std::vector<std::int64_t> a(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
        a[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(radix[i]));
        idx /= static_cast<std::size_t>(radix[i]);
    }
    return a;
}

/// Throws InputError naming the first violated clause of the module data.
inline void check_module_spec(const ParameterSet& p, const ModuleSpec& s) {
    const int n = p.n();
    for (const auto* set : {&s.I, &s.J})
        for (int i : *set)
            if (i < 1 || i > n) throw InputError("index set entry " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (s.mu.size() != static_cast<std::size_t>(n)) throw InputError("mu must have n entries");
    if (s.gamma.size() != static_cast<std::size_t>(n)) throw InputError("gamma must have n entries");
    for (int i = 1; i <= n; ++i) {
        const auto& mu = s.mu[static_cast<std::size_t>(i - 1)];
        const auto& g = s.gamma[static_cast<std::size_t>(i - 1)];
        if (mu.order() != p.L() || g.order() != p.L()) throw InputError("module scalars must lie in Q(zeta_L)");
        const bool in_both = s.I.count(i) && s.J.count(i);
        if (mu.is_zero() != in_both)
            throw InputError("mu_" + std::to_string(i) + " must be zero exactly when " + std::to_string(i) +
                             " lies in I and J");
        if (g.is_zero()) throw InputError("gamma_" + std::to_string(i) + " must be nonzero");
    }
    for (int i : s.I) {
        const CycloNum prev = i == 1 ? p.one() : s.gamma[static_cast<std::size_t>(i - 2)];
        if (p.q(i) * s.gamma[static_cast<std::size_t>(i - 1)] != prev)
            throw InputError("q_" + std::to_string(i) + " gamma_" + std::to_string(i) + " must equal gamma_" +
                             std::to_string(i - 1) + " for " + std::to_string(i) + " in I");
    }
}

/// The module M(mu(I,J), gamma(I)) of dimension prod l_i over the maltsiniotis algebra.
inline Representation construct_module(const ParameterSet& p, const ModuleSpec& s) {
    check_module_spec(p, s);
    const int n = p.n();
    const std::int64_t L = p.L();
    Representation rep;
    rep.radix = p.orders();
    const std::size_t d = static_cast<std::size_t>(p.product_of_orders());
    auto gamma = [&](int i) { return i == 0 ? p.one() : s.gamma[static_cast<std::size_t>(i - 1)]; };

    for (int i = 1; i <= n; ++i) {
        const bool in_I = s.I.count(i) > 0;
        const bool in_IJ = in_I && s.J.count(i) > 0;
        const std::int64_t li = p.l(i);
        const CycloNum& mu = s.mu[static_cast<std::size_t>(i - 1)];
        const CycloNum inv_q1 = inverse(p.q(i) - p.one());
        Matrix X(d, d, L), Y(d, d, L);
        for (std::size_t idx = 0; idx < d; ++idx) {
            const auto a = basis_label(rep.radix, idx);
            const std::int64_t ai = a[static_cast<std::size_t>(i - 1)];
            // Exponents of zeta in A(a;i) and B(a;i).
            std::int64_t ea = 0, eb = 0;
            for (int sdx = 1; sdx < i; ++sdx) {
                const std::int64_t as = a[static_cast<std::size_t>(sdx - 1)];
                const std::int64_t sign = s.I.count(sdx) ? -1 : 1;
                ea += sign * as * (p.q_exp(sdx) + p.lambda_exp(sdx, i));
                eb -= sign * as * p.lambda_exp(sdx, i);
            }
            const CycloNum A = p.root(ea);
            const CycloNum B = p.root(eb);
            auto shifted = [&](std::int64_t step) {
                auto b = a;
                b[static_cast<std::size_t>(i - 1)] = mod_floor(ai + step, li);
                return basis_index(rep.radix, b);
            };
            if (!in_I) {
                X(idx, shifted(+1)) = mu * A;
                Y(idx, shifted(-1)) = inverse(mu) * B * (p.root(p.q_exp(i) * ai) * gamma(i) - gamma(i - 1)) * inv_q1;
            } else {
                const CycloNum down = A * (p.root(-p.q_exp(i) * ai) - p.one()) * gamma(i - 1) * inv_q1;
                if (!in_IJ) {
                    X(idx, shifted(-1)) = inverse(mu) * down;
                    Y(idx, shifted(+1)) = mu * B;
                } else {
                    if (ai != 0) X(idx, shifted(-1)) = down;
                    if (ai != li - 1) Y(idx, shifted(+1)) = B;
                }
            }
        }
        rep.x.push_back(std::move(X));
        rep.y.push_back(std::move(Y));
    }
    return rep;
}

/// rho(z_i) = rho(x_i) rho(y_i) - rho(y_i) rho(x_i) for either algebra; rho(z_0) = identity.
inline Matrix z_matrix(const Representation& rep, int i) {
    if (i == 0) return Matrix::identity(rep.dim(), rep.order());
    return rep.X(i) * rep.Y(i) - rep.Y(i) * rep.X(i);
}

namespace detail {

inline RelationCheck matrix_relation(std::string id, const Matrix& lhs, const Matrix& rhs) {
    auto w = lhs.first_difference(rhs);
    return {std::move(id), !w.has_value(), w};
}

} // namespace detail

/// Every defining relation of `kind` as a matrix identity; failures carry the first offending basis index.
inline std::vector<RelationCheck> verify_module(const ParameterSet& p, const Representation& rep, AlgebraKind kind) {
    const int n = p.n();
    std::vector<RelationCheck> out;
    if (rep.n() != n || rep.x.size() != static_cast<std::size_t>(n) || rep.y.size() != static_cast<std::size_t>(n)) {
        out.push_back({"shape: one x and one y matrix per index", false, {}});
        return out;
    }
    const std::size_t d = rep.dim();
    for (const auto& m : rep.generator_matrices())
        if (m.rows() != d || m.cols() != d || m.order() != p.L()) {
            out.push_back({"shape: square matrices of equal size over Q(zeta_L)", false, {}});
            return out;
        }

    const bool malt = kind == AlgebraKind::maltsiniotis;
    auto s = [](int i) { return std::to_string(i); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const CycloNum lam = p.lambda(i, j), lam_inv = p.lambda(j, i);
            const CycloNum xx = malt ? p.q(i) * lam : lam;
            const CycloNum yx = malt ? inverse(p.q(i)) * lam_inv : lam_inv;
            const auto &Xi = rep.X(i), &Yi = rep.Y(i), &Xj = rep.X(j), &Yj = rep.Y(j);
            out.push_back(detail::matrix_relation("y" + s(i) + " y" + s(j) + " = lambda" + s(i) + s(j) + " y" + s(j) + " y" + s(i),
                                                  Yi * Yj, lam * (Yj * Yi)));
            out.push_back(detail::matrix_relation("x" + s(i) + " x" + s(j) + " = " + (malt ? "q" + s(i) + " " : "") + "lambda" +
                                                      s(i) + s(j) + " x" + s(j) + " x" + s(i),
                                                  Xi * Xj, xx * (Xj * Xi)));
            out.push_back(detail::matrix_relation("x" + s(i) + " y" + s(j) + " = lambda" + s(i) + s(j) + "^-1 y" + s(j) + " x" + s(i),
                                                  Xi * Yj, lam_inv * (Yj * Xi)));
            out.push_back(detail::matrix_relation("y" + s(i) + " x" + s(j) + " = " + (malt ? "q" + s(i) + "^-1 " : "") + "lambda" +
                                                      s(i) + s(j) + "^-1 x" + s(j) + " y" + s(i),
                                                  Yi * Xj, yx * (Xj * Yi)));
        }
    Matrix rhs = Matrix::identity(d, p.L());
    for (int i = 1; i <= n; ++i) {
        const auto &Xi = rep.X(i), &Yi = rep.Y(i);
        out.push_back(detail::matrix_relation("x" + s(i) + " y" + s(i) + " - q" + s(i) + " y" + s(i) + " x" + s(i) + " = " +
                                                  (malt ? "z" + s(i - 1) : std::string("1")),
                                              Xi * Yi - p.q(i) * (Yi * Xi), rhs));
        if (malt) rhs += (p.q(i) - p.one()) * (Yi * Xi);
    }
    return out;
}

inline bool all_pass(const std::vector<RelationCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

enum class TorsionTag { zero, invertible, mixed };

inline std::string to_string(TorsionTag t) {
    switch (t) {
        case TorsionTag::zero: return "zero";
        case TorsionTag::invertible: return "invertible";
        default: return "mixed";
    }
}

/// Action of each z_i: zero, invertible, or neither (impossible on a simple module).
inline std::vector<TorsionTag> torsion_profile(const Representation& rep) {
    std::vector<TorsionTag> tags;
    for (int i = 1; i <= rep.n(); ++i) {
        Matrix z = z_matrix(rep, i);
        if (z.is_zero()) tags.push_back(TorsionTag::zero);
        else if (!determinant(z).is_zero()) tags.push_back(TorsionTag::invertible);
        else tags.push_back(TorsionTag::mixed);
    }
    return tags;
}

/// Dimension of the algebra spanned by all words in the generator matrices.
inline std::size_t burnside_span_dimension(const Representation& rep) {
    const std::size_t d = rep.dim();
    const std::size_t full = d * d;
    const auto gens = rep.generator_matrices();
    RowReducer span(full);
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(d, rep.order());
    span.add(id.data());
    queue.push_back(std::move(id));
    while (!queue.empty() && span.rank() < full) {
        Matrix w = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Matrix gw = g * w;
            if (gw.is_zero()) continue;
            if (span.add(gw.data())) queue.push_back(std::move(gw));
            if (span.rank() == full) break;
        }
    }
    return span.rank();
}

/// Burnside: simple over the algebraic closure iff the words span all d x d matrices.
inline bool simplicity_check(const Representation& rep) {
    return rep.dim() > 0 && burnside_span_dimension(rep) == rep.dim() * rep.dim();
}

struct EigenData {
    std::vector<CycloNum> alpha;  // rho(x_i)^{l_i} = alpha_i
    std::vector<CycloNum> beta;   // rho(y_i)^{l_i} = beta_i
    std::vector<CycloNum> zeta;   // reference eigenvalue of rho(z_i)
    std::vector<std::vector<CycloNum>> zeta_spectrum;  // all eigenvalues with multiplicity when diagonal
    std::vector<bool> canonical;  // zeta_i read off basis state 0 of a diagonal rho(z_i)
};

/// Scalars of the central elements x_i^{l_i}, y_i^{l_i}, and eigenvalue data of z_i.
inline EigenData extract_eigendata(const ParameterSet& p, const Representation& rep) {
    EigenData out;
    const std::size_t d = rep.dim();
    for (int i = 1; i <= p.n(); ++i) {
        const std::int64_t li = p.l(i);
        auto a = matrix_power(rep.X(i), li).scalar_value();
        auto b = matrix_power(rep.Y(i), li).scalar_value();
        if (!a || !b) throw VerificationError("not a module over the expected center: power of x" + std::to_string(i) +
                                              " or y" + std::to_string(i) + " is not scalar");
        out.alpha.push_back(*a);
        out.beta.push_back(*b);

        const Matrix z = z_matrix(rep, i);
        std::vector<CycloNum> spectrum;
        if (z.is_diagonal()) {
            for (std::size_t k = 0; k < d; ++k) spectrum.push_back(z(k, k));
            out.zeta.push_back(spectrum.front());
            out.canonical.push_back(true);
        } else {
            auto zl = matrix_power(z, li).scalar_value();
            if (!zl) throw VerificationError("z" + std::to_string(i) + "^l" + std::to_string(i) + " is not scalar");
            for (const auto& cand : roots_of_unity_times_rational(*zl, li)) {
                if (determinant(z - Matrix::scalar(d, cand)).is_zero()) spectrum.push_back(cand);
            }
            if (spectrum.empty())
                throw VerificationError("no eigenvalue of z" + std::to_string(i) + " found in Q(zeta_L)");
            out.zeta.push_back(spectrum.front());
            out.canonical.push_back(false);
        }
        const CycloNum ref = pow(out.zeta.back(), li);
        for (const auto& ev : spectrum)
            if (pow(ev, li) != ref)
                throw VerificationError("eigenvalues of z" + std::to_string(i) + " do not form one root-of-unity orbit");
        out.zeta_spectrum.push_back(std::move(spectrum));
    }
    return out;
}

struct IntertwinerSpace {
    std::size_t dimension = 0;
    std::vector<Matrix> basis;
    bool certified_invertible = false;  // dimension 1 and the basis element has nonzero determinant
};

/// All Phi with rho1(g) Phi = Phi rho2(g) for every generator g (module maps M1 -> M2, v |-> v Phi).
inline IntertwinerSpace intertwiner_space(const Representation& r1, const Representation& r2) {
    if (r1.dim() != r2.dim() || r1.n() != r2.n() || r1.order() != r2.order())
        throw InputError("intertwiner space needs representations of equal dimension over the same algebra");
    const std::size_t d = r1.dim();
    const std::int64_t L = r1.order();
    const auto g1 = r1.generator_matrices();
    const auto g2 = r2.generator_matrices();
    RowReducer eqs(d * d);
    auto var = [d](std::size_t r, std::size_t c) { return r * d + c; };
    for (std::size_t g = 0; g < g1.size() && eqs.rank() < d * d; ++g)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                CycloVector row(d * d, CycloNum::zero(L));
                bool any = false;
                for (std::size_t k = 0; k < d; ++k) {
                    if (!g1[g](r, k).is_zero()) {
                        row[var(k, c)] += g1[g](r, k);
                        any = true;
                    }
                    if (!g2[g](k, c).is_zero()) {
                        row[var(r, k)] -= g2[g](k, c);
                        any = true;
                    }
                }
                if (any) eqs.add(std::move(row));
            }
    IntertwinerSpace out;
    for (auto& v : eqs.nullspace(L)) {
        Matrix m(d, d, L);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) m(r, c) = v[var(r, c)];
        out.basis.push_back(std::move(m));
    }
    out.dimension = out.basis.size();
    out.certified_invertible = out.dimension == 1 && !determinant(out.basis.front()).is_zero();
    return out;
}

/// Pulls a maltsiniotis representation back along theta: rho'(y_i) = rho(y_i),
/// rho'(x_i) = rho(z_{i-1})^{-1} rho(x_i).
inline Representation to_alternative(const Representation& rep) {
    Representation out = rep;
    for (int i = 2; i <= rep.n(); ++i) {
        Matrix zinv;
        try {
            zinv = inverse(z_matrix(rep, i - 1));
        } catch (const DivisionByZero&) {
            throw InputError("torsion module cannot be transported: z" + std::to_string(i - 1) + " acts singularly");
        }
        out.x[static_cast<std::size_t>(i - 1)] = zinv * rep.X(i);
    }
    return out;
}

/// Inverse transport. theta maps the alternative z'_k to z_{k-1}^{-1} z_k, so
/// rho(z_{i-1}) = rho'(z'_1) ... rho'(z'_{i-1}) and rho(x_i) = rho(z_{i-1}) rho'(x_i).
inline Representation from_alternative(const Representation& alt) {
    Representation out = alt;
    Matrix acc = Matrix::identity(alt.dim(), alt.order());
    for (int i = 2; i <= alt.n(); ++i) {
        acc = acc * z_matrix(alt, i - 1);
        out.x[static_cast<std::size_t>(i - 1)] = acc * alt.X(i);
    }
    return out;
}

} // namespace qweyl
