#include <gtest/gtest.h>

#include "orbifold/parameters.hpp"
#include "orbifold/solver.hpp"

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

// c = sum_t d_t (g-1)^(p-t), the kernel element a d-vector names.
GroupAlgebraElement c_of_d(Prime p, std::vector<Scalar> const& d)
{
    GroupAlgebraElement c(p);
    for (std::size_t t = 1; t <= d.size(); ++t)
        c += GroupAlgebraElement::gminus1_power(p, p.value() - static_cast<int>(t)) * d[t - 1];
    return c;
}

std::vector<std::vector<Scalar>> all_d(int p, int k)
{
    std::vector<std::vector<Scalar>> out;
    std::vector<Scalar> d(static_cast<std::size_t>(k), 0);
    while (true) {
        out.push_back(d);
        int t = k - 1;
        while (t >= 0 && ++d[static_cast<std::size_t>(t)] == p) d[static_cast<std::size_t>(t--)] = 0;
        if (t < 0) break;
    }
    return out;
}

}  // namespace

TEST(Parameters, RunningExampleValues)
{
    const Prime p(3);
    const auto b = parse_element("1-g", p);
    const auto a = parse_element("-1+g+g^2", p);
    const auto params = build_candidate(a, b);
    for (int i = 0; i < 3; ++i) {
        const auto gi = GroupAlgebraElement::group(p, i);
        EXPECT_EQ(params.lambda(i, 0), b * gi * static_cast<Scalar>(i));
        // lambda(g^i, v2) = C(i,2)(1-g)g^i + i(g^(i+1) + g^(i+2))
        EXPECT_EQ(params.lambda(i, 1),
                  b * gi * fp::binomial(i, 2, p) + (gi.shifted(1) + gi.shifted(2)) * static_cast<Scalar>(i));
    }
    VGroupElement kappa(p);
    kappa.add_to_column(0, Vector{2, 0});  // -v1
    kappa.add_to_column(1, Vector{0, 2});  // -g v2
    EXPECT_EQ(params.kappa_l(), kappa);
    EXPECT_TRUE(params.kappa_c().is_zero());
}

TEST(Parameters, MuIsTheCoefficientOfTheKernelElement)
{
    for (int q : {3, 5}) {
        const Prime p(q);
        for (int k = 0; k <= q; ++k) {
            for (auto const& d : all_d(q, k)) {
                const auto c = c_of_d(p, d);
                for (int j = 1; j < q; ++j) ASSERT_EQ(mu(d, j, p), c[q - j]);
            }
        }
    }
}

TEST(Parameters, ImpliedAMatchesSolverRouteP3)
{
    const Prime p(3);
    for (auto const& b : all_elements(p)) {
        const int k = gminus1_factor(b).k;
        for (auto const& d : all_d(3, k)) {
            const auto a = implied_a(b, d);
            ASSERT_EQ(a, a_from_c(c_of_d(p, d), b));
            ASSERT_TRUE(system_residual(a, b).is_zero());
        }
    }
}

TEST(Parameters, ClosedFormEqualsCandidate)
{
    const Prime p(3);
    const auto kappa_c = parse_element("1+2g", p);
    for (auto const& b : all_elements(p)) {
        const int k = gminus1_factor(b).k;
        for (auto const& d : all_d(3, k)) {
            auto expected = build_candidate(implied_a(b, d), b);
            expected.kappa_c() = kappa_c;
            ASSERT_EQ(closed_form(b, d, kappa_c), expected);
        }
    }
}

TEST(Parameters, ClosedFormRejectsWrongDLength)
{
    const Prime p(3);
    const std::vector<Scalar> d{1, 2};
    try {
        closed_form(parse_element("1-g", p), d, GroupAlgebraElement(p));
        FAIL() << "expected Error";
    } catch (Error const& e) {
        EXPECT_NE(std::string(e.what()).find("k = 1"), std::string::npos) << e.what();
    }
}

TEST(Parameters, ParamsToAbRoundTripP3)
{
    const Prime p(3);
    const auto all = all_elements(p);
    for (auto const& a : all)
        for (auto const& b : all) {
            const auto r = params_to_ab(build_candidate(a, b));
            ASSERT_TRUE(std::holds_alternative<CandidatePair>(r));
            ASSERT_EQ(std::get<CandidatePair>(r).a, a);
            ASSERT_EQ(std::get<CandidatePair>(r).b, b);
        }
}

TEST(Parameters, CoboundaryShiftLeavesCandidateShape)
{
    const Prime p(3);
    const auto params = build_candidate(parse_element("g", p), parse_element("1", p));
    const auto shifted = add_coboundary(params, CoboundaryData{parse_element("g", p), GroupAlgebraElement(p)});
    EXPECT_TRUE(std::holds_alternative<NotOfCandidateForm>(params_to_ab(shifted)));
    // f(v1) constant only moves lambda(g^i, v2) by -i f_0 g^i; kappaL is unchanged.
    const auto constant = add_coboundary(params, CoboundaryData{parse_element("1", p), GroupAlgebraElement(p)});
    EXPECT_EQ(constant.kappa_l(), params.kappa_l());
    EXPECT_EQ(constant.lambda(2, 1), params.lambda(2, 1) - GroupAlgebraElement::group(p, 2) * 2);
}

TEST(Parameters, CoboundaryIgnoresFOfV2)
{
    const Prime p(5);
    const auto params = build_candidate(parse_element("1+g^3", p), parse_element("g-1", p));
    EXPECT_EQ(add_coboundary(params, CoboundaryData{GroupAlgebraElement(p), parse_element("1+g+g^4", p)}), params);
}

TEST(Parameters, LambdaIsLinearInBothArguments)
{
    const Prime p(5);
    const auto params = build_candidate(parse_element("2+g^2+3g^4", p), parse_element("1+4g+g^3", p));
    const auto x = parse_element("1+2g^3", p);
    const auto y = parse_element("4g+g^2", p);
    const Vector u{2, 3};
    const Vector w{1, 4};
    EXPECT_EQ(params.lambda_at(x + y, u), params.lambda_at(x, u) + params.lambda_at(y, u));
    EXPECT_EQ(params.lambda_at(x, add(u, w, 5)), params.lambda_at(x, u) + params.lambda_at(x, w));
    EXPECT_EQ(params.lambda_at(GroupAlgebraElement::group(p, 3), kV2), params.lambda(3, 1));
}

TEST(Parameters, ZeroCandidate)
{
    const Prime p(3);
    EXPECT_EQ(build_candidate(GroupAlgebraElement(p), GroupAlgebraElement(p)), DeformationParams(p));
}
