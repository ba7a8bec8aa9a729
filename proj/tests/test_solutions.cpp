#include "oracles.hpp"

#include <radolab/families.hpp>
#include <radolab/solutions.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace radolab;

namespace {

auto tuples(const SolutionSet & set) -> std::vector<std::vector<Int>>
{
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < set.size(); ++i)
        out.emplace_back(set[i].begin(), set[i].end());
    return out;
}

auto random_equation(std::mt19937_64 & rng, int max_arity, Int max_coef) -> std::vector<Int>
{
    std::uniform_int_distribution<int> arity(2, max_arity);
    std::uniform_int_distribution<Int> coef(-max_coef, max_coef);
    std::vector<Int> c(static_cast<std::size_t>(arity(rng)));
    for (auto & x : c)
        do
            x = coef(rng);
        while (x == 0);
    return c;
}

} // namespace

TEST(EnumerateSolutions, SchurN4)
{
    auto set = enumerate_solutions(LinearEquation({1, -1, -1}), 4);
    std::vector<std::vector<Int>> expected{{2, 1, 1}, {3, 1, 2}, {3, 2, 1}, {4, 1, 3}, {4, 2, 2}, {4, 3, 1}};
    EXPECT_EQ(tuples(set), expected);
}

TEST(EnumerateSolutions, SmallExamples)
{
    EXPECT_EQ(enumerate_solutions(parse_equation("x + y = z"), 4).size(), 6u);
    EXPECT_TRUE(enumerate_solutions(LinearEquation({1, -1, -1}), 1).empty());
    EXPECT_THROW(enumerate_solutions(LinearEquation({1, -1, -1}), 0), InvalidArgument);
}

TEST(EnumerateSolutions, BudgetCap)
{
    EXPECT_THROW(enumerate_solutions(LinearEquation({1, 1, 1, -1}), 1000, 1000), BudgetExceeded);
    EXPECT_NO_THROW(enumerate_solutions(LinearEquation({1, 1, 1, -1}), 10, 1000));
}

TEST(EnumerateSolutions, OverflowIsAnError)
{
    LinearEquation huge({std::numeric_limits<Int>::max() / 4, -1});
    EXPECT_THROW(enumerate_solutions(huge, 8), ArithmeticOverflow);
}

TEST(EnumerateSolutions, MatchesNestedLoopOracleProperty)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> n_dist(1, 14);
    for (int trial = 0; trial < 300; ++trial) {
        auto c = random_equation(rng, 4, 7);
        Int n = n_dist(rng);
        auto set = enumerate_solutions(LinearEquation(c), n);
        ASSERT_EQ(tuples(set), oracle::solutions(c, n)) << "trial " << trial;
        for (std::size_t i = 0; i < set.size(); ++i)
            ASSERT_TRUE(check_solution(set.equation(), set[i]));
    }
}

TEST(EnumerateSolutions, RestrictEqualsDirectEnumeration)
{
    LinearEquation eq({2, 2, 1, -3});
    auto big = enumerate_solutions(eq, 30);
    for (Int n = 1; n <= 30; ++n)
        ASSERT_EQ(tuples(big.restrict(n)), tuples(enumerate_solutions(eq, n)));
}

TEST(WriteSolutions, OneTuplePerLine)
{
    std::ostringstream out;
    write_solutions(out, enumerate_solutions(LinearEquation({1, -1, -1}), 3));
    EXPECT_EQ(out.str(), "2 1 1\n3 1 2\n3 2 1\n");
}

TEST(PsiProfile, Examples)
{
    auto p = psi_profile(LinearEquation({1, -1, -1}), 4);
    EXPECT_EQ(p.count(1), 0u);
    EXPECT_EQ(p.count(2), 2u);
    EXPECT_EQ(p.count(3), 4u);
    EXPECT_EQ(p.total, 6u);

    auto q = psi_profile(parse_equation("x + y = 2z"), 3);
    EXPECT_EQ(q.count(1), 3u);
    EXPECT_EQ(q.total, q.count(1) + q.count(2) + q.count(3));
}

TEST(PsiProfile, TotalIsSumAndConstantCountProperty)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> n_dist(1, 25);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = random_equation(rng, 4, 6);
        LinearEquation eq(c);
        Int n = n_dist(rng);
        auto p = psi_profile(eq, n);
        std::uint64_t sum = 0;
        for (std::size_t i = 1; i <= eq.arity(); ++i)
            sum += p.count(i);
        ASSERT_EQ(sum, p.total);
        ASSERT_EQ(p.count(1) > 0, eq.has_constant_solutions());
        ASSERT_EQ(p.by_distinct, oracle::psi(c, n));
    }
}

TEST(PsiProfile, MonotoneInN)
{
    for (auto c : {std::vector<Int>{1, -1, -1}, std::vector<Int>{2, 3, -5}, std::vector<Int>{1, 1, 1, -2}}) {
        LinearEquation eq(c);
        auto prev = psi_profile(eq, 1);
        for (Int n = 2; n <= 40; ++n) {
            auto cur = psi_profile(eq, n);
            ASSERT_GE(cur.total, prev.total);
            for (std::size_t i = 1; i <= eq.arity(); ++i)
                ASSERT_GE(cur.count(i), prev.count(i));
            prev = cur;
        }
    }
}

TEST(PsiProfile, DifferencePsi2MatchesFloorFormula)
{
    for (Int b = 1; b <= 6; ++b) {
        auto all = enumerate_solutions(family_equation({Family::difference, 1, b}), 200);
        for (Int n = 1; n <= 200; ++n)
            ASSERT_EQ(psi_profile(all.restrict(n)).count(2), static_cast<std::uint64_t>(n / (b + 1)))
                << "b=" << b << " N=" << n;
    }
}

TEST(PhiMaxDegree, Examples)
{
    auto set = enumerate_solutions(LinearEquation({1, -1, -2}), 6);
    std::vector<std::vector<Int>> expected{{3, 1, 1}, {4, 2, 1}, {5, 1, 2}, {5, 3, 1}, {6, 2, 2}, {6, 4, 1}};
    EXPECT_EQ(tuples(set), expected);
    EXPECT_EQ(phi_max_degree(set).max_degree, 5u);
    EXPECT_EQ(phi_max_degree(LinearEquation({1, -1, -1}), 2).max_degree, 0u);
    auto s4 = enumerate_solutions(LinearEquation({1, -1, -1}), 4);
    EXPECT_EQ(phi_max_degree(s4).max_degree, oracle::phi_pairwise(tuples(s4)));
}

TEST(PhiMaxDegree, ExcludesConstantTuples)
{
    auto set = enumerate_solutions(parse_equation("x + y = 2z"), 5);
    auto stats = phi_max_degree(set);
    EXPECT_EQ(stats.vertices, set.size() - 5);
    std::uint64_t hist_total = 0;
    for (auto [d, n] : stats.degree_histogram)
        hist_total += n;
    EXPECT_EQ(hist_total, stats.vertices);
}

TEST(PhiMaxDegree, InvertedIndexMatchesPairwiseScanProperty)
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Int> n_dist(1, 40);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        auto c = random_equation(rng, 4, 5);
        Int n = n_dist(rng);
        auto set = enumerate_solutions(LinearEquation(c), n);
        if (set.size() > 5000)
            continue;
        auto stats = phi_max_degree(set);
        ASSERT_EQ(stats.max_degree, oracle::phi_pairwise(tuples(set)));
        if (stats.vertices > 0) {
            ASSERT_LT(stats.max_degree, stats.vertices);
        }
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(DependencyDegrees, SymmetricRelation)
{
    // sum of degrees is twice the edge count, so it must be even
    auto set = enumerate_solutions(LinearEquation({3, -3, -2}), 30);
    std::uint64_t sum = 0;
    for (auto d : dependency_degrees(set))
        sum += d;
    EXPECT_EQ(sum % 2, 0u);
}
