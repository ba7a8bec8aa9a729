#include "oracles.hpp"
#include "suite.hpp"

#include <radolab/bounds.hpp>
#include <radolab/exact.hpp>
#include <radolab/witnesses.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace radolab;

namespace {

auto value_of(Family f, Int a, Int b) -> BoundReport { return family_value_2color({f, a, b}); }

// Direct floating evaluation of sum_i psi_i c^(1-i) < 1.
auto union_bound_float(const std::vector<std::uint64_t> & psi, int c) -> bool
{
    double s = 0;
    for (std::size_t i = 1; i < psi.size(); ++i)
        s += static_cast<double>(psi[i]) * std::pow(static_cast<double>(c), 1.0 - static_cast<double>(i));
    return s < 1.0;
}

} // namespace

TEST(FamilyValue, Examples)
{
    auto r = value_of(Family::difference, 1, 3);
    EXPECT_EQ(r.kind, BoundKind::exact_value);
    EXPECT_EQ(r.integer_bound, 19);
    EXPECT_EQ(value_of(Family::scaled_difference, 3, 2).integer_bound, 9);
    EXPECT_EQ(value_of(Family::x_y_az_a1w, 4, 1).integer_bound, 5);
    EXPECT_EQ(value_of(Family::x_ay_2az, 5, 1).integer_bound, 25);
}

TEST(FamilyValue, ConditionsAndRegimes)
{
    EXPECT_FALSE(value_of(Family::x_y_az_a1w, 3, 1).conditions_met);
    EXPECT_FALSE(value_of(Family::two_two_a3, 24, 1).conditions_met);
    EXPECT_TRUE(value_of(Family::two_two_a3, 25, 1).conditions_met);
    EXPECT_FALSE(value_of(Family::three_three_a5, 29, 1).conditions_met);
    EXPECT_TRUE(value_of(Family::three_three_a5, 30, 1).conditions_met);

    auto small = value_of(Family::scaled_difference, 2, 3);
    EXPECT_EQ(small.kind, BoundKind::lower_bound);
    EXPECT_EQ(small.integer_bound, 13);
    // gcd reduction: 4(x-y)=6z behaves as 2(x-y)=3z
    EXPECT_EQ(value_of(Family::scaled_difference, 4, 6).integer_bound, 13);
    EXPECT_EQ(value_of(Family::scaled_difference, 6, 4).integer_bound, 9);

    auto nonreg = value_of(Family::two_variable, 1, 2);
    EXPECT_EQ(nonreg.kind, BoundKind::not_regular);
    EXPECT_FALSE(nonreg.integer_bound);
    EXPECT_EQ(value_of(Family::two_variable, 3, 3).integer_bound, 1);

    EXPECT_THROW(value_of(Family::two_two_ab, 1, 1), UnsupportedFamily);
    EXPECT_THROW(value_of(Family::difference, 1, 0), InvalidArgument);
}

TEST(FamilyValue, ExactReportsAreIntegral)
{
    for (Int b = 1; b <= 6; ++b)
        for (auto f : {Family::difference, Family::scaled_difference, Family::x_ay_2az, Family::x_y_az_a1w}) {
            auto r = value_of(f, b + 1, b);
            if (r.kind == BoundKind::exact_value) {
                EXPECT_EQ(r.value, std::round(r.value));
            }
        }
}

TEST(FamilyValue, CertificatesVerify)
{
    for (Int a = 1; a <= 6; ++a)
        for (Int b = 1; b <= 6; ++b) {
            FamilyInstance f{Family::scaled_difference, a, b};
            auto r = family_value_2color(f);
            ASSERT_TRUE(r.certificate);
            auto col = parse_certificate(*r.certificate, ColorCount(2));
            EXPECT_FALSE(verify_coloring(family_equation(f), col)) << a << "," << b;
            EXPECT_EQ(col.interval() + 1, *r.integer_bound);
        }
}

TEST(FamilyValue, MatchesExactSolver)
{
    std::vector<FamilyInstance> cases;
    for (Int b = 1; b <= 3; ++b)
        cases.push_back({Family::difference, 1, b});
    for (Int a = 2; a <= 4; ++a)
        for (Int b = 1; b < a; ++b)
            cases.push_back({Family::scaled_difference, a, b});
    for (Int a = 1; a <= 4; ++a)
        cases.push_back({Family::x_ay_2az, a, 1});
    cases.push_back({Family::x_y_az_a1w, 4, 1});
    cases.push_back({Family::x_y_az_a1w, 5, 1});
    cases.push_back({Family::two_two_a3, 25, 1});
    cases.push_back({Family::three_three_a5, 30, 1});
    for (const auto & f : cases) {
        auto r = family_value_2color(f);
        ASSERT_TRUE(r.conditions_met);
        auto exact = compute_rado(family_equation(f), ColorCount(2));
        ASSERT_EQ(exact.status, RadoStatus::exact);
        EXPECT_EQ(exact.value, *r.integer_bound) << family_id(f.family) << " a=" << f.a << " b=" << f.b;
    }
}

TEST(MultiplesBound, RecognizesGeneralPattern)
{
    // x + 3y + 6z = 9w: 1 is coprime to 3, the rest divisible by 3
    auto r = multiples_lower_bound(LinearEquation({1, 3, 6, -9}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->integer_bound, 9);
    EXPECT_FALSE(verify_coloring(LinearEquation({1, 3, 6, -9}), parse_certificate(*r->certificate, ColorCount(2))));
    EXPECT_FALSE(multiples_lower_bound(LinearEquation({1, -1, -1})));
}

TEST(QuadraticUpperBound, Examples)
{
    EXPECT_EQ(quadratic_upper_bound(LinearEquation({1, -1, -1}))->integer_bound, 5);
    EXPECT_EQ(quadratic_upper_bound(LinearEquation({1, -1, -2}))->integer_bound, 11);
    EXPECT_FALSE(quadratic_upper_bound(LinearEquation({1, -2})));
}

TEST(QuadraticUpperBound, TightForDifferenceFamily)
{
    for (Int b = 1; b <= 6; ++b) {
        auto eq = family_equation({Family::difference, 1, b});
        EXPECT_EQ(quadratic_upper_bound(eq)->integer_bound, family_value_2color({Family::difference, 1, b}).integer_bound);
    }
}

TEST(ProbSearch, Examples)
{
    auto r = prob_lower_bound_search(LinearEquation({1, -1, -1}), ColorCount(2), 100);
    EXPECT_EQ(r.integer_bound, 3);  // R > 2
    EXPECT_EQ(r.value, 2.0);
    EXPECT_TRUE(r.strict);
    EXPECT_FALSE(r.truncated);

    auto truncated = prob_lower_bound_search(LinearEquation({1, -1, -1}), ColorCount(30), 5);
    EXPECT_TRUE(truncated.truncated);
    EXPECT_EQ(truncated.value, 5.0);

    auto constant = prob_lower_bound_search(parse_equation("x + y = 2z"), ColorCount(4), 50);
    EXPECT_EQ(constant.value, 0.0);
}

TEST(ProbSearch, MatchesFloatingEvaluationOfOraclePsi)
{
    for (auto c : {std::vector<Int>{1, -1, -2}, std::vector<Int>{2, -2, -3}, std::vector<Int>{1, 2, -4}}) {
        for (int colors : {2, 3, 4}) {
            Int expected = 0;
            for (Int n = 1; n <= 60; ++n) {
                if (! union_bound_float(oracle::psi(c, n), colors))
                    break;
                expected = n;
            }
            auto r = prob_lower_bound_search(LinearEquation(c), ColorCount(colors), 60);
            EXPECT_EQ(static_cast<Int>(r.value), expected);
        }
    }
}

TEST(ProbSearch, MonotoneInColors)
{
    for (const auto & tc : suite::known_values()) {
        auto eq = suite::equation(tc);
        double prev = -1;
        for (int c = 2; c <= 6; ++c) {
            auto r = prob_lower_bound_search(eq, ColorCount(c), 120);
            EXPECT_GE(r.value, prev) << tc.name << " c=" << c;
            prev = r.value;
        }
    }
}

TEST(ProbClosed, Examples)
{
    auto forms = prob_lower_bound_closed(1, ColorCount(2));
    ASSERT_EQ(forms.size(), 2u);
    EXPECT_EQ(forms[0].provenance, "probabilistic.difference.inequality");
    EXPECT_EQ(forms[0].value, 1.0);
    EXPECT_NEAR(forms[1].value, (std::sqrt(68.0) - 2) / 2, 1e-12);
    EXPECT_NEAR(forms[1].value, 3.123, 1e-3);

    // independent evaluation of the inequality for b=2, c=3
    auto b2c3 = prob_lower_bound_closed(2, ColorCount(3));
    Int n = 0;
    while ((n + 1) * 2.0 / 3.0 + (n + 1) * (n + 3) / 4.0 < 9.0)
        ++n;
    EXPECT_EQ(b2c3[0].value, static_cast<double>(n));
    double b = 2, c = 3;
    EXPECT_NEAR(b2c3[1].value, (std::sqrt((b + c - 1) * (b + c - 1) + 8 * c * c * (b * b + b)) - b - c + 1) / 2, 1e-12);
}

TEST(ProbClosed, InequalityRootBracketsInteger)
{
    for (Int b = 1; b <= 8; ++b)
        for (int c = 2; c <= 5; ++c) {
            auto r = prob_lower_bound_closed(b, ColorCount(c))[0];
            ASSERT_TRUE(r.auxiliary);
            EXPECT_LT(r.value, *r.auxiliary);
            EXPECT_GE(r.value + 1, *r.auxiliary);
        }
}

TEST(LllSearch, Examples)
{
    LinearEquation eq({1, -1, -2});
    auto three = lll_lower_bound_search(eq, ColorCount(3), 200);
    EXPECT_NEAR(*three.auxiliary, 27 / std::numbers::e, 1e-12);
    Int expected = 0;
    for (Int n = 1; n <= 200; ++n) {
        auto phi = oracle::phi_pairwise(oracle::solutions({1, -1, -2}, n));
        if (! (static_cast<double>(phi) + 1 < 27 / std::numbers::e))
            break;
        expected = n;
    }
    EXPECT_EQ(static_cast<Int>(three.value), expected);
    EXPECT_GE(expected, 6);  // phi_6 = 5 satisfies the condition

    auto two = lll_lower_bound_search(eq, ColorCount(2), 200);
    EXPECT_NEAR(*two.auxiliary, 8 / std::numbers::e, 1e-12);
    EXPECT_LE(two.value, three.value);
}

TEST(LllSearch, EmptyGraphRegime)
{
    // below the first solution phi = 0 and the condition is 1 < c^i / e
    auto r = lll_lower_bound_search(LinearEquation({1, -1, -5}), ColorCount(2), 6);
    EXPECT_EQ(r.value, 6.0);
    EXPECT_TRUE(r.truncated);
}

TEST(LllSearch, DistinctExponentIsWeaker)
{
    for (const auto & tc : suite::known_values()) {
        auto eq = suite::equation(tc);
        for (int c = 2; c <= 4; ++c) {
            auto full = lll_lower_bound_search(eq, ColorCount(c), 150);
            auto weak = lll_lower_bound_search(eq, ColorCount(c), 150, LllExponent::arity_minus_one);
            EXPECT_LE(weak.value, full.value);
            EXPECT_EQ(weak.provenance, "local-lemma.search.distinct-exponent");
        }
    }
}

TEST(LllClosed, Examples)
{
    auto d2 = lll_lower_bound_closed(1, 2, ColorCount(3));
    ASSERT_EQ(d2.size(), 2u);  // also in the a < b regime
    EXPECT_NEAR(d2[0].value, 5.373, 1e-3);
    EXPECT_NEAR(lll_lower_bound_closed(3, 2, ColorCount(3))[0].value, 3 * 27 / (5 * std::numbers::e), 1e-12);
    EXPECT_NEAR(lll_lower_bound_closed(3, 2, ColorCount(3))[0].value, 5.96, 1e-2);
    auto a1b3 = lll_lower_bound_closed(1, 3, ColorCount(3));
    ASSERT_EQ(a1b3.size(), 1u);
    EXPECT_NEAR(a1b3[0].value, 3 * 27 / (6 * std::numbers::e) + 9.0 / 6.0, 1e-12);
    EXPECT_NEAR(a1b3[0].value, 6.466, 1e-3);
    EXPECT_THROW(lll_lower_bound_closed(2, 1, ColorCount(3)), UnsupportedFamily);
}

TEST(BoundSoundness, LowerBoundsBelowExactValues)
{
    for (const auto & tc : suite::known_values()) {
        auto eq = suite::equation(tc);
        Int v = tc.two_color_value;
        auto prob = prob_lower_bound_search(eq, ColorCount(2), 200);
        EXPECT_LE(*prob.integer_bound, v) << tc.name;
        for (auto e : {LllExponent::arity, LllExponent::arity_minus_one}) {
            auto lll = lll_lower_bound_search(eq, ColorCount(2), 200, e);
            EXPECT_LE(*lll.integer_bound, v) << tc.name;
        }
        if (auto m = multiples_lower_bound(eq)) {
            EXPECT_LE(*m->integer_bound, v) << tc.name;
        }
        if (auto q = quadratic_upper_bound(eq)) {
            EXPECT_GE(*q->integer_bound, v) << tc.name;
        }
    }
}

TEST(BoundSoundness, ThreeColorLowerBounds)
{
    // R_3(x-y=z) = 14 and R_3(x-y=2z) > 42 (certificate search)
    LinearEquation schur({1, -1, -1});
    EXPECT_LE(*prob_lower_bound_search(schur, ColorCount(3), 100).integer_bound, 14);
    EXPECT_LE(*lll_lower_bound_search(schur, ColorCount(3), 100).integer_bound, 14);
    for (const auto & r : prob_lower_bound_closed(1, ColorCount(3)))
        if (r.provenance == "probabilistic.difference.inequality") {
            EXPECT_LE(*r.integer_bound, 14);
        }
}

TEST(NonregularWitness, Examples)
{
    auto col = nonregular_witness_coloring(1, 2, 8);
    EXPECT_EQ(to_certificate(col), "01100001");
    EXPECT_FALSE(verify_coloring(LinearEquation({1, -2}), col));
    EXPECT_FALSE(verify_coloring(LinearEquation({2, -3}), nonregular_witness_coloring(2, 3, 10)));
    EXPECT_EQ(nonregular_witness_coloring(1, 2, 1).interval(), 1);
    EXPECT_THROW(nonregular_witness_coloring(3, 3, 5), InvalidArgument);
    EXPECT_EQ(to_certificate(nonregular_witness_coloring(2, 1, 8)), "01100001");
}

TEST(NonregularWitness, CleanForAllCoprimePairs)
{
    for (Int a = 1; a <= 6; ++a)
        for (Int b = a + 1; b <= 6; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            auto col = nonregular_witness_coloring(a, b, 500);
            EXPECT_FALSE(verify_coloring(LinearEquation({a, -b}), col)) << a << "," << b;
        }
}

TEST(NonregularWitness, ExponentAtExactPowers)
{
    EXPECT_EQ(log_ratio_exponent(1, 2, 1), 0);
    EXPECT_EQ(log_ratio_exponent(1, 2, 4), 2);
    EXPECT_EQ(log_ratio_exponent(1, 2, 7), 2);
    EXPECT_EQ(log_ratio_exponent(2, 3, 9), 5);  // (3/2)^5 = 7.59 <= 9 < 11.39
    EXPECT_EQ(log_ratio_exponent(4, 9, 81), 5);  // (9/4)^5 = 57.7, (9/4)^6 = 129.7
}

TEST(Conjectures, CheckTargetsAgainstExactSolver)
{
    for (Int q = 2; q <= 3; ++q) {
        auto exact = compute_rado(LinearEquation({1, q, -q * q}), ColorCount(2));
        ASSERT_EQ(exact.status, RadoStatus::exact);
        RecordProperty("x+" + std::to_string(q) + "y=" + std::to_string(q * q) + "z",
            std::to_string(exact.value) + " vs conjectured " + std::to_string(conjectured_x_qy_q2z(q)));
    }
    for (Int a = 1; a <= 4; ++a) {
        auto exact = compute_rado(LinearEquation({1 + a, a, -2 * a}), ColorCount(2));
        ASSERT_EQ(exact.status, RadoStatus::exact);
        RecordProperty("x+a(x+y)=2aw a=" + std::to_string(a),
            std::to_string(exact.value) + " vs conjectured " + std::to_string(conjectured_x_axy_2aw(a)));
    }
    EXPECT_EQ(conjectured_x_qy_q2z(2), 4);
    EXPECT_EQ(conjectured_x_qy_q2z(3), 15);
    EXPECT_EQ(conjectured_x_axy_2aw(4), 16);
}
