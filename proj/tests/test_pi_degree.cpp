#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include "support.hpp"

using namespace qweyl;

namespace {

IntSkewMat skew(std::vector<std::vector<Integer>> rows) { return IntSkewMat(IntMatrix::from_rows(rows)); }

std::int64_t product_except(const ParameterSet& p, int r) {
    std::int64_t out = 1;
    for (int i = 1; i <= p.n(); ++i)
        if (i != r) out *= p.l(i);
    return out;
}

/// Certificate check written out entry by entry, independent of check_skew_normal_form.
void expect_certificate(const IntSkewMat& h, const SkewNormalForm& nf) {
    const std::size_t n = h.size();
    const IntMatrix& w = nf.transform;
    Integer det = determinant(w);
    ASSERT_TRUE(det == 1 || det == -1);
    ASSERT_EQ(2 * nf.factors.size() + nf.kernel_dim, n);
    for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) ASSERT_EQ(nf.factors[k + 1] % nf.factors[k], 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Integer acc = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) acc += w(r, a) * h(a, b) * w(c, b);
            Integer expected = 0;
            if (r / 2 == c / 2 && r / 2 < nf.factors.size() && r != c) expected = r < c ? nf.factors[r / 2] : -nf.factors[r / 2];
            ASSERT_EQ(acc, expected) << "entry (" << r << "," << c << ")";
        }
    EXPECT_EQ(check_skew_normal_form(h, nf), "");
}

IntSkewMat random_skew(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound), zero(0, 3);
    IntSkewMat h = IntSkewMat::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) h.set(i, j, zero(rng) == 0 ? 0 : entry(rng));
    return h;
}

} // namespace

TEST(PiDegree, ExponentMatrixExamples) {
    auto p1 = validate({1, {2}, {1}, {}});
    EXPECT_EQ(weyl_exponent_matrix(p1, AlgebraKind::maltsiniotis), skew({{0, -1}, {1, 0}}));
    EXPECT_EQ(weyl_exponent_matrix(p1, AlgebraKind::maltsiniotis, 1), IntSkewMat::zero(2));

    auto p2 = validate({2, {2, 4}, {2, 1}, {{1, 2, 2}}});
    auto h = weyl_exponent_matrix(p2, AlgebraKind::maltsiniotis);
    EXPECT_EQ(h(0, 2), 2);
    EXPECT_EQ(h(0, 3), -4);
    EXPECT_EQ(h(1, 2), -2);
    EXPECT_EQ(h(1, 3), 4);
    EXPECT_EQ(h(0, 1), -2);
    EXPECT_EQ(h(2, 3), -1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h(i, j), -h(j, i));

    auto alt = weyl_exponent_matrix(p2, AlgebraKind::alternative);
    EXPECT_EQ(alt(0, 3), -2);
    EXPECT_EQ(alt(1, 3), 2);
    EXPECT_THROW(weyl_exponent_matrix(p2, AlgebraKind::maltsiniotis, 3), InputError);
}

TEST(PiDegree, ExponentMatrixEncodesTheCommutationScalars) {
    // g_a g_b = zeta^{H(a,b)} g_b g_a on the quantum affine space: compare with the relation list.
    auto p = validate(preset(PresetCase::B, 3, 5));
    for (auto kind : {AlgebraKind::maltsiniotis, AlgebraKind::alternative}) {
        auto h = weyl_exponent_matrix(p, kind);
        WeylAlgebra A(p, kind);
        const auto gens = A.generators();
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b) {
                if (gens[a].index == gens[b].index) continue;
                // matrix order is y_1, x_1, ..., y_n, x_n
                auto slot = [](const Generator& g) { return static_cast<std::size_t>(2 * (g.index - 1) + (g.is_x ? 1 : 0)); };
                const auto lhs = A.multiply(A.generator(gens[a]), A.generator(gens[b]));
                const auto rhs = A.multiply(A.generator(gens[b]), A.generator(gens[a]));
                EXPECT_EQ(lhs, p.root(h(slot(gens[a]), slot(gens[b])).get_si()) * rhs) << gens[a].name() << gens[b].name();
            }
    }
}

TEST(PiDegree, SkewNormalFormExamples) {
    auto nf = skew_normal_form(skew({{0, -1}, {1, 0}}));
    EXPECT_EQ(nf.factors, std::vector<Integer>{1});
    EXPECT_EQ(nf.kernel_dim, 0u);

    auto zero = skew_normal_form(IntSkewMat::zero(2));
    EXPECT_TRUE(zero.factors.empty());
    EXPECT_EQ(zero.kernel_dim, 2u);

    auto p2 = validate({2, {2, 4}, {2, 1}, {{1, 2, 2}}});
    auto h = weyl_exponent_matrix(p2, AlgebraKind::maltsiniotis);
    auto nf2 = skew_normal_form(h);
    expect_certificate(h, nf2);
    EXPECT_EQ(nf2.factors.size(), 2u);

    EXPECT_THROW(IntSkewMat(IntMatrix::from_rows({{0, 1}, {1, 0}})), InputError);
}

TEST(PiDegree, ImageCardinalityExamples) {
    EXPECT_EQ(image_cardinality(skew({{0, -1}, {1, 0}}), 2), 4);
    for (int m : {1, 2, 5, 12}) EXPECT_EQ(image_cardinality(IntSkewMat::zero(4), m), 1);
    EXPECT_EQ(image_cardinality(skew({{0, -2}, {2, 0}}), 4), 4);
    EXPECT_EQ(image_cardinality_enumerated(skew({{0, -2}, {2, 0}}).matrix(), 4), 4);
}

TEST(PiDegree, PiDegreeExamples) {
    EXPECT_EQ(pi_degree(skew({{0, -1}, {1, 0}}), 2), 2);
    auto p2 = validate({2, {2, 4}, {2, 1}, {{1, 2, 2}}});
    auto rep = pi_degree_report(weyl_exponent_matrix(p2, AlgebraKind::maltsiniotis), p2.L());
    EXPECT_EQ(rep.pi_degree, 8);
    EXPECT_EQ(rep.oracle_cardinality, 64);
}

TEST(PiDegree, SmithAgreesWithEnumerationOnSmallMatrices) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 150; ++k) {
        const std::size_t n = k % 2 == 0 ? 2 : 4;
        auto h = random_skew(rng, n, 6);
        for (int m = 1; m <= 6; ++m)
            ASSERT_EQ(image_cardinality_smith(h.matrix(), m), image_cardinality_enumerated(h.matrix(), m));
    }
    // non-square, non-skew input for the Smith path alone
    IntMatrix rect = IntMatrix::from_rows({{2, 4, 6}, {1, 3, 5}});
    EXPECT_EQ(image_cardinality_smith(rect, 4), image_cardinality_enumerated(rect, 4));
}

// Every valid parameter set with n <= 2 and l_n <= 12, plus a fixed-stride sample at n = 3:
// PI degree equals the product of the orders, prime factors drop one order, and the
// alternative algebra agrees.
TEST(PiDegree, ProductFormulaOnAllParameterSets) {
    std::size_t count = 0, seen = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : fixtures::chains(n, 12))
            for (const auto& p : fixtures::all_parameter_sets(l)) {
                if (n == 3 && seen++ % 41 != 0) continue;
                ++count;
                const auto full = weyl_exponent_matrix(p, AlgebraKind::maltsiniotis);
                ASSERT_EQ(pi_degree(full, p.L()), p.product_of_orders());
                ASSERT_EQ(pi_degree(weyl_exponent_matrix(p, AlgebraKind::alternative), p.L()), p.product_of_orders());
                for (int r = 1; r <= n; ++r)
                    ASSERT_EQ(pi_degree(weyl_exponent_matrix(p, AlgebraKind::maltsiniotis, r), p.L()), product_except(p, r));
            }
    std::printf("checked %zu parameter sets\n", count);
    EXPECT_GT(count, 1000u);
}

TEST(PiDegree, SquareMatchesOracleForSeveralModuli) {
    for (const auto& p : fixtures::theorem_grid())
        for (auto kind : {AlgebraKind::maltsiniotis, AlgebraKind::alternative})
            for (int m : {2, 3, 4, 6, 8, 12}) {
                const auto h = weyl_exponent_matrix(p, kind);
                auto rep = pi_degree_report(h, m);
                ASSERT_EQ(rep.pi_degree * rep.pi_degree, rep.oracle_cardinality);
            }
}

TEST(PiDegree, RandomCertificates) {
    std::mt19937_64 rng(0);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + 2 * static_cast<std::size_t>(k % 4);
        auto h = random_skew(rng, n, k < 100 ? 12 : 1000);
        auto nf = skew_normal_form(h);
        expect_certificate(h, nf);
        if (::testing::Test::HasFatalFailure()) return;
        // the invariant factors determine the Smith diagonal: h_1, h_1, h_2, h_2, ...
        std::vector<Integer> doubled;
        for (const auto& f : nf.factors) {
            doubled.push_back(f);
            doubled.push_back(f);
        }
        ASSERT_EQ(smith_diagonal(h.matrix()), doubled);
    }
}

TEST(PiDegree, DegenerateInputs) {
    EXPECT_EQ(pi_degree(IntSkewMat::zero(6), 12), 1);
    EXPECT_THROW(pi_degree(IntSkewMat::zero(2), 0), InputError);
    // odd size has a kernel
    IntSkewMat h = IntSkewMat::zero(3);
    h.set(0, 1, 3);
    h.set(1, 2, 6);
    auto nf = skew_normal_form(h);
    expect_certificate(h, nf);
    EXPECT_EQ(nf.kernel_dim, 1u);
}
