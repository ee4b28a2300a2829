#include <gtest/gtest.h>

#include "orbifold/pbw_checker.hpp"

using namespace orbifold;

namespace {

std::vector<GroupAlgebraElement> all_elements(Prime p)
{
    std::vector<GroupAlgebraElement> out;
    std::uint64_t n = 1;
    for (int i = 0; i < p.value(); ++i) n *= static_cast<std::uint64_t>(p.value());
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(GroupAlgebraElement::from_index(p, i));
    return out;
}

// The p residuals of the condition 2 system, written out directly.
bool system_holds(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    const int p = a.p();
    for (int l = 0; l < p; ++l) {
        long s = static_cast<long>(a[0]) * b[l];
        for (int j = 0; j < p; ++j) {
            const int k = ((l - j) % p + p) % p;
            const long c2 = static_cast<long>(j + 1) * j / 2;
            s += static_cast<long>(b[k]) * (-c2 * b[j] + static_cast<long>(j) * a[j]);
        }
        if (((s % p) + p) % p != 0) return false;
    }
    return true;
}

}  // namespace

TEST(PbwChecker, ZeroParamsPass)
{
    const auto report = check_all(DeformationParams(Prime(5)));
    EXPECT_TRUE(report.passed());
    EXPECT_FALSE(report[4].note.empty());
    EXPECT_FALSE(report[5].note.empty());
}

TEST(PbwChecker, CandidatesSatisfyConditions136AndCondition2IffSystemP3)
{
    const Prime p(3);
    const auto all = all_elements(p);
    int solutions = 0;
    for (auto const& a : all)
        for (auto const& b : all) {
            const auto report = check_all(build_candidate(a, b));
            ASSERT_TRUE(report[1].passed);
            ASSERT_TRUE(report[3].passed);
            ASSERT_TRUE(report[6].passed);
            ASSERT_EQ(report[2].passed, system_holds(a, b)) << to_string(a) << " | " << to_string(b);
            solutions += report.passed();
        }
    EXPECT_EQ(solutions, 81);
}

TEST(PbwChecker, Condition2SampledP5)
{
    const Prime p(5);
    const auto all = all_elements(p);
    for (std::size_t t = 0; t < 2000; ++t) {
        auto const& a = all[(t * 7919 + 3) % all.size()];
        auto const& b = all[(t * 104729 + 11) % all.size()];
        ASSERT_EQ(check_condition2(build_candidate(a, b)).passed, system_holds(a, b));
    }
}

TEST(PbwChecker, NonSolutionReportsCondition2Witness)
{
    const Prime p(3);
    const auto report = check_all(build_candidate(parse_element("g", p), parse_element("1-g", p)));
    EXPECT_FALSE(report.passed());
    ASSERT_FALSE(report[2].witnesses.empty());
    auto const& w = report[2].witnesses.front();
    EXPECT_EQ(w.basis_vectors, (std::vector<int>{1, 2}));
    EXPECT_FALSE(std::get<GroupAlgebraElement>(w.residual).is_zero());
}

TEST(PbwChecker, KappaCIsInvisibleBecauseDetIsOne)
{
    const Prime p(3);
    auto params = build_candidate(parse_element("-1+g+g^2", p), parse_element("1-g", p));
    for (auto const& kc : all_elements(p)) {
        params.kappa_c() = kc;
        ASSERT_TRUE(check_all(params).passed());
    }
}

TEST(PbwChecker, BrokenCocycleFailsCondition1)
{
    const Prime p(3);
    auto params = build_candidate(parse_element("g", p), parse_element("1", p));
    params.lambda(2, 0) += GroupAlgebraElement::one(p);
    const auto result = check_condition1(params);
    EXPECT_FALSE(result.passed);
    ASSERT_FALSE(result.witnesses.empty());
}

TEST(PbwChecker, MismatchedKappaLFailsCondition3)
{
    const Prime p(3);
    auto params = build_candidate(GroupAlgebraElement(p), parse_element("1", p));
    params.kappa_l().add_to_column(1, Vector{0, 1});
    EXPECT_FALSE(check_condition3(params).passed);
}

TEST(PbwChecker, Condition6HoldsForArbitraryTables)
{
    const Prime p(5);
    DeformationParams params(p);
    params.kappa_l() = VGroupElement(parse_element("1+2g+3g^4", p), parse_element("4g^2+g^3", p));
    EXPECT_TRUE(check_condition6(params).passed);
}
