#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "orbifold/pbw_checker.hpp"
#include "orbifold/rewriting.hpp"
#include "orbifold/solver.hpp"

using namespace orbifold;

namespace {

const FreeWord v1(1, kLetterV1);
const FreeWord v2(1, kLetterV2);

FreeWord g(int m) { return FreeWord(1, group_letter(m)); }

DeformationParams running_example()
{
    const Prime p(3);
    return build_candidate(parse_element("-1+g+g^2", p), parse_element("1-g", p));
}

NCPolynomial poly(Prime p, std::initializer_list<std::pair<FreeWord, std::int64_t>> terms)
{
    NCPolynomial out(p);
    for (auto const& [w, c] : terms) out.add_term(w, c);
    return out;
}

}  // namespace

TEST(Rewriting, WordHelpers)
{
    EXPECT_EQ(word_to_string(FreeWord{}), "1");
    EXPECT_EQ(word_to_string(v1 + v2 + g(2)), "v1*v2*g^2");
    EXPECT_EQ(filtered_degree(v2 + g(1) + v1), 2);
    EXPECT_TRUE(group_word(3, 3).empty());
    EXPECT_EQ(group_word(4, 3), g(1));
    EXPECT_EQ(to_string(NormalWord{2, 1, 1}), "v1*v1*v2*g");
}

TEST(Rewriting, ZeroParamsRules)
{
    const auto rules = rules_from_params(DeformationParams(Prime(3)));
    EXPECT_EQ(rules.rhs(1, 0), NCPolynomial(Prime(3), v1 + g(1)));
    EXPECT_EQ(rules.rhs(2, 1), poly(Prime(3), {{v1 + g(2), 2}, {v2 + g(2), 1}}));
    EXPECT_EQ(rules.commutator, NCPolynomial(Prime(3), v1 + v2));
}

TEST(Rewriting, RunningExampleCommutator)
{
    const auto rules = rules_from_params(running_example());
    EXPECT_EQ(rules.commutator, poly(Prime(3), {{v1 + v2, 1}, {v1, 1}, {v2 + g(1), 1}}));
}

TEST(Rewriting, ReduceExamples)
{
    const Prime p(3);
    const auto rules = rules_from_params(running_example());
    Reducer r(rules);
    EXPECT_EQ(r.reduce(g(1) + v1), poly(p, {{v1 + g(1), 1}, {g(1), 1}, {g(2), -1}}));
    EXPECT_EQ(r.reduce(v1 + v2 + g(1)), NCPolynomial(p, v1 + v2 + g(1)));
    EXPECT_EQ(r.reduce(g(1) + g(2)), NCPolynomial(p, FreeWord{}));
    EXPECT_EQ(r.reduce(g(2) + g(2)), NCPolynomial(p, g(1)));
}

TEST(Rewriting, OracleMultiplyExamples)
{
    const Prime p(3);
    const auto rules = rules_from_params(running_example());
    Reducer r(rules);
    EXPECT_EQ(oracle_multiply({1, 0, 0}, {0, 1, 0}, r), NCPolynomial(p, v1 + v2));
    EXPECT_EQ(oracle_multiply({0, 0, 1}, {0, 0, 1}, r), NCPolynomial(p, g(2)));
    EXPECT_EQ(oracle_multiply({0, 1, 0}, {1, 0, 0}, r), rules.commutator);
}

TEST(Rewriting, FindRedex)
{
    EXPECT_FALSE(find_redex(v1 + v1 + v2 + g(2), Strategy::leftmost));
    EXPECT_EQ(find_redex(v2 + v1 + g(1) + v2, Strategy::leftmost), std::optional<std::size_t>(0));
    EXPECT_EQ(find_redex(v2 + v1 + g(1) + v2, Strategy::rightmost), std::optional<std::size_t>(2));
    EXPECT_TRUE(is_irreducible(v2 + g(1)));
    EXPECT_FALSE(is_irreducible(g(1) + g(1)));
}

TEST(Rewriting, TraceFormat)
{
    const auto rules = rules_from_params(running_example());
    std::ostringstream trace;
    Reducer r(rules, Strategy::leftmost, &trace);
    r.reduce(g(1) + v1);
    EXPECT_EQ(trace.str().substr(0, trace.str().find('\n')), "g*v1 -> 1*g + 2*g^2 + 1*v1*g  [R1]");
    EXPECT_EQ(r.memo_size(), 0U);
}

TEST(Rewriting, ReduceIsLinearAndTerminates)
{
    const Prime p(5);
    const auto rules = rules_from_params(build_candidate(parse_element("1+2g^3", p), parse_element("3+g", p)));
    Reducer r(rules);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> letter(0, 5);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<int> coeff(0, 4);
    auto random_word = [&] {
        FreeWord w;
        for (int t = len(rng); t > 0; --t) w.push_back(static_cast<Letter>(letter(rng)));
        return w;
    };
    for (int t = 0; t < 200; ++t) {
        const FreeWord x = random_word();
        const FreeWord y = random_word();
        const Scalar a = static_cast<Scalar>(coeff(rng));
        const Scalar b = static_cast<Scalar>(coeff(rng));
        NCPolynomial sum(p);
        sum.add_term(x, a);
        sum.add_term(y, b);
        NCPolynomial expected(p);
        expected.add_scaled(r.reduce(x), a);
        expected.add_scaled(r.reduce(y), b);
        ASSERT_EQ(r.reduce(sum), expected);
        for (auto const& [w, c] : expected.terms()) ASSERT_TRUE(is_irreducible(w));
    }
}

TEST(Rewriting, StrategiesAgreeOnSolutionsP3)
{
    const Prime p(3);
    const auto b = parse_element("(g-1)^2", p);
    for (auto const& s : solve_for(b).solutions) {
        const auto rules = rules_from_params(build_candidate(s.a, b));
        Reducer left(rules, Strategy::leftmost);
        Reducer right(rules, Strategy::rightmost);
        // All words of degree <= 4 and length <= 5.
        std::vector<FreeWord> frontier{FreeWord{}};
        for (int len = 1; len <= 5; ++len) {
            std::vector<FreeWord> next;
            for (auto const& w : frontier)
                for (int c = 0; c <= p.value(); ++c) {
                    FreeWord x = w;
                    x.push_back(static_cast<Letter>(c));
                    if (filtered_degree(x) > 4) continue;
                    ASSERT_EQ(left.reduce(x), right.reduce(x)) << word_to_string(x);
                    next.push_back(std::move(x));
                }
            frontier = std::move(next);
        }
    }
}

TEST(Rewriting, AssociativityZeroAndSolution)
{
    EXPECT_TRUE(check_associativity(rules_from_params(DeformationParams(Prime(3))), 4).passed);
    EXPECT_TRUE(check_associativity(rules_from_params(running_example()), 4).passed);
    const auto res = check_associativity(rules_from_params(DeformationParams(Prime(5))), 3, 2);
    EXPECT_TRUE(res.passed);
    EXPECT_GT(res.triples_checked, 0U);
    EXPECT_THROW(check_associativity(rules_from_params(DeformationParams(Prime(3))), 2), Error);
}

TEST(Rewriting, AssociativityNonSolutionWitness)
{
    const Prime p(3);
    const auto params = build_candidate(parse_element("g", p), parse_element("1-g", p));
    ASSERT_FALSE(check_all(params).passed());
    const auto res = check_associativity(rules_from_params(params), 3);
    ASSERT_FALSE(res.passed);
    ASSERT_TRUE(res.witness);
    EXPECT_EQ(res.witness->x, (NormalWord{0, 0, 1}));
    EXPECT_EQ(res.witness->y, (NormalWord{0, 1, 0}));
    EXPECT_EQ(res.witness->z, (NormalWord{1, 0, 0}));
    EXPECT_FALSE(res.witness->left == res.witness->right);
    const auto two = check_associativity(rules_from_params(params), 3, 3);
    EXPECT_EQ(two.witness->x, res.witness->x);
    EXPECT_EQ(two.witness->z, res.witness->z);
}

TEST(Rewriting, DimensionCounts)
{
    const auto res = check_dimension(rules_from_params(running_example()), 4);
    EXPECT_TRUE(res.passed);
    EXPECT_TRUE(res.idempotent);
    EXPECT_EQ(res.counts, (std::vector<std::uint64_t>{3, 9, 18, 30, 45}));
    EXPECT_EQ(res.counts, res.expected);
}

TEST(Rewriting, NormalWordsOrder)
{
    const auto words = normal_words(3, 1);
    ASSERT_EQ(words.size(), 9U);
    EXPECT_EQ(words[0], (NormalWord{0, 0, 0}));
    EXPECT_EQ(words[3].degree(), 1);
}
