#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace qweyl;

namespace {

std::string validation_error(const RawParameters& raw) {
    try {
        validate(raw);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Parameters, ValidExamples) {
    auto p1 = validate({1, {2}, {1}, {}});
    EXPECT_EQ(p1.q(1), CycloNum::rational(2, Rational(-1)));

    auto p2 = validate({2, {2, 4}, {2, 1}, {{1, 2, 2}}});
    EXPECT_EQ(p2.L(), 4);
    EXPECT_EQ(p2.lambda(1, 2), CycloNum::rational(4, Rational(-1)));
    EXPECT_EQ(p2.lambda(2, 1), CycloNum::rational(4, Rational(-1)));
    EXPECT_TRUE(p2.lambda(1, 1).is_one());
    EXPECT_TRUE(p2.lambda(2, 2).is_one());
    EXPECT_TRUE((p2.lambda(1, 2) * p2.lambda(2, 1)).is_one());
}

TEST(Parameters, ErrorMessagesNameTheFirstViolatedClause) {
    EXPECT_NE(validation_error({2, {2, 4}, {2, 1}, {{1, 2, 1}}}).find("lambda_12 not an l_1-th root of unity"),
              std::string::npos);
    EXPECT_NE(validation_error({2, {4, 2}, {1, 1}, {}}).find("divisibility chain violated"), std::string::npos);
    EXPECT_NE(validation_error({1, {1}, {0}, {}}).find("at least 2"), std::string::npos);
    EXPECT_NE(validation_error({1, {4}, {2}, {}}).find("q_1 is not a primitive"), std::string::npos);
    EXPECT_NE(validation_error({2, {2}, {1}, {}}).find("malformed"), std::string::npos);
    EXPECT_NE(validation_error({2, {2, 2}, {1, 1}, {{2, 1, 0}}}).find("malformed"), std::string::npos);
    EXPECT_NE(validation_error({2, {2, 2}, {1, 1}, {{1, 2, 0}, {1, 2, 1}}}).find("duplicate"), std::string::npos);
    // l_i >= 2 is checked before divisibility, divisibility before q orders
    EXPECT_NE(validation_error({2, {1, 3}, {1, 5}, {}}).find("at least 2"), std::string::npos);
    EXPECT_NE(validation_error({2, {4, 6}, {5, 5}, {}}).find("divisibility"), std::string::npos);
}

TEST(Parameters, IndexOutOfRange) {
    auto p = validate({1, {3}, {1}, {}});
    EXPECT_THROW(p.q(0), InputError);
    EXPECT_THROW(p.q(2), InputError);
    EXPECT_THROW(p.lambda(1, 2), InputError);
}

TEST(Parameters, Presets) {
    auto a = validate(preset(PresetCase::A, 2, 3));
    EXPECT_EQ(a.orders(), (std::vector<std::int64_t>{3, 3}));
    EXPECT_TRUE(a.lambda(1, 2).is_one());
    EXPECT_EQ(a.q(1), a.q(2));

    auto b = validate(preset(PresetCase::B, 2, 3));
    EXPECT_EQ(b.q(1), make_root(3, 2));
    EXPECT_EQ(b.q(2), make_root(3, 2));
    EXPECT_EQ(b.lambda(1, 2), inverse(make_root(3, 1)));
    EXPECT_TRUE(pow(b.q(1), 3).is_one());
    EXPECT_FALSE(b.q(1).is_one());

    EXPECT_THROW(preset(PresetCase::B, 2, 4), InputError);
    for (int n = 1; n <= 4; ++n) {
        for (std::int64_t ord = 2; ord <= 12; ++ord) EXPECT_NO_THROW(validate(preset(PresetCase::A, n, ord)));
        for (std::int64_t ord = 3; ord <= 13; ord += 2) EXPECT_NO_THROW(validate(preset(PresetCase::B, n, ord)));
    }
}

TEST(Parameters, ScalarOrdersByRepeatedMultiplication) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : fixtures::chains(n, 8))
            for (const auto& p : fixtures::all_parameter_sets(l)) {
                for (int i = 1; i <= n; ++i) {
                    CycloNum acc = p.q(i);
                    std::int64_t ord = 1;
                    while (!acc.is_one()) {
                        acc *= p.q(i);
                        ++ord;
                    }
                    ASSERT_EQ(ord, p.l(i));
                    for (int j = i; j <= n; ++j) ASSERT_TRUE(pow(p.lambda(i, j), p.l(i)).is_one());
                }
            }
}

TEST(Parameters, GeneratedGroupIsCyclicOfOrderL) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : fixtures::chains(n, 12))
            for (const auto& p : fixtures::all_parameter_sets(l)) {
                // closure of the exponent set under addition mod L
                std::set<std::int64_t> group{0};
                std::vector<std::int64_t> gens;
                for (int i = 1; i <= n; ++i) {
                    gens.push_back(p.q_exp(i));
                    for (int j = 1; j <= n; ++j) gens.push_back(p.lambda_exp(i, j));
                }
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (auto e : std::vector<std::int64_t>(group.begin(), group.end()))
                        for (auto g : gens) grew = group.insert((e + g) % p.L()).second || grew;
                }
                ASSERT_EQ(static_cast<std::int64_t>(group.size()), p.L());
            }
}

TEST(Parameters, KindParsing) {
    EXPECT_EQ(parse_kind("maltsiniotis"), AlgebraKind::maltsiniotis);
    EXPECT_EQ(parse_kind("alternative"), AlgebraKind::alternative);
    EXPECT_EQ(to_string(AlgebraKind::alternative), "alternative");
    EXPECT_THROW(parse_kind("weyl"), InputError);
}

TEST(Parameters, RawRoundTrip) {
    auto p = validate({3, {2, 4, 8}, {4, 2, 1}, {{1, 2, 4}, {1, 3, 12}, {2, 3, 6}}});
    EXPECT_EQ(p.lambda_exp(1, 3), 4);  // reduced mod L
    EXPECT_EQ(p.lambda_exp(3, 1), 4);
    EXPECT_EQ(validate(p.raw()), p);
}
