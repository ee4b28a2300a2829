#include "orbifold/pbw_checker.hpp"

#include <algorithm>

namespace orbifold {

bool ConditionReport::passed() const noexcept
{
    return std::all_of(conditions.begin(), conditions.end(), [](ConditionResult const& c) { return c.passed; });
}

namespace {

ConditionResult make_result(int condition) { return ConditionResult{condition, true, {}, {}}; }

void fail(ConditionResult& result, std::vector<int> exps, std::vector<int> vecs, Residual residual)
{
    result.passed = false;
    result.witnesses.push_back(Witness{std::move(exps), std::move(vecs), std::move(residual)});
}

}  // namespace

ConditionResult check_condition1(DeformationParams const& params)
{
    auto result = make_result(1);
    const Prime p = params.prime();
    for (int i = 0; i < p.value(); ++i) {
        for (int h = 0; h < p.value(); ++h) {
            for (int j = 0; j < 2; ++j) {
                const Vector v = basis_vector(j);
                const auto lhs = params.lambda(i + h, j);
                const auto rhs = params.lambda_at(i, act(p, h, v)).shifted(h) + params.lambda(h, j).shifted(i);
                auto residual = lhs - rhs;
                if (!residual.is_zero()) fail(result, {i, h}, {j + 1}, std::move(residual));
            }
        }
    }
    return result;
}

ConditionResult check_condition2(DeformationParams const& params)
{
    auto result = make_result(2);
    const Prime p = params.prime();
    const Vector u = kV1;
    const Vector v = kV2;
    const auto kappa_l = params.kappa_l_at(u, v);
    for (int i = 0; i < p.value(); ++i) {
        const auto gi = GroupAlgebraElement::group(p, i);
        const auto lhs = params.kappa_c_at(act(p, i, u), act(p, i, v)) * gi - gi * params.kappa_c_at(u, v);

        auto rhs = params.lambda_at(params.lambda_at(i, v), u) - params.lambda_at(params.lambda_at(i, u), v);
        for (int a = 0; a < p.value(); ++a) {
            const Vector ka = kappa_l.column(a);
            if (ka == Vector{}) continue;
            rhs += params.lambda_at(i, ka).shifted(a);
        }
        auto residual = rhs - lhs;
        if (!residual.is_zero()) fail(result, {i}, {1, 2}, std::move(residual));
    }
    return result;
}

ConditionResult check_condition3(DeformationParams const& params)
{
    auto result = make_result(3);
    const Prime p = params.prime();
    const int n = p.value();
    const Vector u = kV1;
    const Vector v = kV2;
    for (int i = 0; i < n; ++i) {
        const auto kappa_moved = params.kappa_l_at(act(p, i, u), act(p, i, v));
        const auto kappa_here = params.kappa_l_at(u, v);
        const auto lam_u = params.lambda_at(i, u);
        const auto lam_v = params.lambda_at(i, v);
        for (int h = 0; h < n; ++h) {
            // G is abelian, so g^-1 h = h g^-1 = g^(h - i).
            const Vector lhs = sub(act(p, i, kappa_here.column(h - i)), kappa_moved.column(h - i), n);
            const Vector rhs = sub(scale(sub(act(p, h, v), act(p, i, v), n), lam_u[h], n),
                                   scale(sub(act(p, h, u), act(p, i, u), n), lam_v[h], n), n);
            const Vector residual = sub(lhs, rhs, n);
            if (!(residual == Vector{})) fail(result, {i, h}, {1, 2}, residual);
        }
    }
    return result;
}

ConditionResult check_condition4(DeformationParams const&)
{
    auto result = make_result(4);
    result.note = "dim V = 2: the cyclic sum is alternating in three arguments and vanishes";
    return result;
}

ConditionResult check_condition5(DeformationParams const&)
{
    auto result = make_result(5);
    result.note = "dim V = 2: the cyclic sum is alternating in three arguments and vanishes";
    return result;
}

ConditionResult check_condition6(DeformationParams const& params)
{
    auto result = make_result(6);
    const Prime p = params.prime();
    const int n = p.value();
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 2; ++c) {
                    const Vector u = basis_vector(a);
                    const Vector v = basis_vector(b);
                    const Vector w = basis_vector(c);
                    Quad2GroupElement residual(p);
                    auto term = [&](Vector x, Vector y, Vector z) {
                        const Vector k = params.kappa_l_at(x, y).column(i);
                        residual.add_to_column(i, sym_mul(k, sub(z, act(p, i, z), n), n));
                    };
                    term(u, v, w);
                    term(v, w, u);
                    term(w, u, v);
                    if (!residual.is_zero()) fail(result, {i}, {a + 1, b + 1, c + 1}, std::move(residual));
                }
            }
        }
    }
    return result;
}

ConditionReport check_all(DeformationParams const& params)
{
    return ConditionReport{{check_condition1(params), check_condition2(params), check_condition3(params),
                            check_condition4(params), check_condition5(params), check_condition6(params)}};
}

std::string to_string(Residual const& r)
{
    return std::visit([](auto const& x) { return orbifold::to_string(x); }, r);
}

}  // namespace orbifold
