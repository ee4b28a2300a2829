#include "orbifold/parameters.hpp"

namespace orbifold {

DeformationParams::DeformationParams(Prime p)
    : lambda_(static_cast<std::size_t>(2 * p.value()), GroupAlgebraElement(p)), kappa_c_(p), kappa_l_(p)
{
}

GroupAlgebraElement const& DeformationParams::lambda(std::int64_t i, int j) const
{
    return lambda_.at(static_cast<std::size_t>(2 * fp::reduce(i, p()) + j));
}

GroupAlgebraElement& DeformationParams::lambda(std::int64_t i, int j)
{
    return lambda_.at(static_cast<std::size_t>(2 * fp::reduce(i, p()) + j));
}

GroupAlgebraElement DeformationParams::lambda_at(std::int64_t i, Vector v) const
{
    return lambda(i, 0) * v.x1 + lambda(i, 1) * v.x2;
}

GroupAlgebraElement DeformationParams::lambda_at(GroupAlgebraElement const& x, Vector v) const
{
    if (x.p() != p()) throw MismatchedPrime(x.p(), p());
    GroupAlgebraElement r(prime());
    for (int m = 0; m < p(); ++m)
        if (x[m] != 0) r += lambda_at(m, v) * x[m];
    return r;
}

GroupAlgebraElement DeformationParams::kappa_c_at(Vector u, Vector w) const
{
    return kappa_c_ * wedge_coordinate(u, w, p());
}

VGroupElement DeformationParams::kappa_l_at(Vector u, Vector w) const
{
    return kappa_l_ * wedge_coordinate(u, w, p());
}

DeformationParams& DeformationParams::operator+=(DeformationParams const& other)
{
    if (other.p() != p()) throw MismatchedPrime(p(), other.p());
    for (std::size_t k = 0; k < lambda_.size(); ++k) lambda_[k] += other.lambda_[k];
    kappa_c_ += other.kappa_c_;
    kappa_l_ += other.kappa_l_;
    return *this;
}

DeformationParams build_candidate(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    if (a.p() != b.p()) throw MismatchedPrime(a.p(), b.p());
    const Prime p = a.prime();
    DeformationParams params(p);

    GroupAlgebraElement a_tail = a;  // sum_{j>=1} a_j g^j
    a_tail.set(0, 0);

    for (int i = 0; i < p.value(); ++i) {
        const auto gi = GroupAlgebraElement::group(p, i);
        params.lambda(i, 0) = b * gi * static_cast<Scalar>(i);
        params.lambda(i, 1) = b * gi * fp::binomial(i, 2, p) + a_tail * gi * static_cast<Scalar>(i);
    }
    params.kappa_l().row(0).set(0, a[0]);
    for (int j = 0; j < p.value(); ++j) params.kappa_l().row(1).set(j, fp::mul(j, b[j], p));
    return params;
}

DeformationParams add_coboundary(DeformationParams params, CoboundaryData const& f)
{
    const Prime p = params.prime();
    if (f.f1.p() != p.value()) throw MismatchedPrime(p.value(), f.f1.p());
    for (int i = 1; i < p.value(); ++i)
        params.lambda(i, 1) -= f.f1.shifted(i) * static_cast<Scalar>(i);
    for (int j = 1; j < p.value(); ++j) params.kappa_l().row(0).accumulate(j, fp::mul(j, f.f1[j], p));
    return params;
}

Scalar mu(std::span<Scalar const> d, int j, Prime p)
{
    std::int64_t sum = 0;
    for (std::size_t t = 1; t <= d.size(); ++t) {
        const auto ti = static_cast<std::int64_t>(t);
        sum += static_cast<std::int64_t>(fp::sign(ti + 1, p)) * fp::binomial(p.value() - ti, p.value() - j, p) %
               p.value() * fp::reduce(d[t - 1], p);
        sum %= p.value();
    }
    return fp::mul(fp::sign(p.value() - j, p), fp::reduce(sum, p), p);
}

GroupAlgebraElement implied_a(GroupAlgebraElement const& b, std::span<Scalar const> d)
{
    const Prime p = b.prime();
    GroupAlgebraElement a(p);
    std::int64_t a0 = 0;
    for (std::size_t t = 1; t <= d.size(); ++t) a0 += fp::mul(fp::sign(static_cast<std::int64_t>(t) + 1, p), fp::reduce(d[t - 1], p), p);
    a.set(0, a0);
    for (int j = 1; j < p.value(); ++j) {
        const Scalar inner = fp::add(mu(d, j, p), fp::mul(fp::binomial(j + 1, 2, p), b[j], p), p);
        a.set(j, fp::mul(fp::fermat_inverse(j, p), inner, p));
    }
    return a;
}

DeformationParams closed_form(GroupAlgebraElement const& b, std::span<Scalar const> d,
                              GroupAlgebraElement const& kappa_c)
{
    const Prime p = b.prime();
    if (kappa_c.p() != p.value()) throw MismatchedPrime(p.value(), kappa_c.p());
    const int k = gminus1_factor(b).k;
    if (static_cast<int>(d.size()) != k)
        throw Error("b lies in the class k = " + std::to_string(k) + " and needs exactly " + std::to_string(k) +
                    " d-values, got " + std::to_string(d.size()));

    DeformationParams params(p);
    for (int i = 0; i < p.value(); ++i) {
        params.lambda(i, 0) = b.shifted(i) * static_cast<Scalar>(i);
        auto& l2 = params.lambda(i, 1);
        for (int j = 0; j < p.value(); ++j) {
            const Scalar jinv = fp::fermat_inverse(j, p);
            const Scalar bcoef = fp::add(fp::binomial(i, 2, p),
                                         fp::mul(i, fp::mul(jinv, fp::binomial(j + 1, 2, p), p), p), p);
            l2.accumulate(i + j, fp::mul(bcoef, b[j], p));
            l2.accumulate(i + j, fp::mul(i, fp::mul(jinv, mu(d, j, p), p), p));
        }
    }
    std::int64_t alternating = 0;
    for (std::size_t t = 1; t <= d.size(); ++t)
        alternating += fp::mul(fp::sign(static_cast<std::int64_t>(t) + 1, p), fp::reduce(d[t - 1], p), p);
    params.kappa_l().row(0).set(0, alternating);
    for (int j = 0; j < p.value(); ++j) params.kappa_l().row(1).set(j, fp::mul(j, b[j], p));
    params.kappa_c() = kappa_c;
    return params;
}

std::variant<CandidatePair, NotOfCandidateForm> params_to_ab(DeformationParams const& params)
{
    // lambda(g, v1) = b g and lambda(g, v2) = sum_{j>=1} a_j g^(j+1).
    const auto b = params.lambda(1, 0).shifted(-1);
    const auto tail = params.lambda(1, 1).shifted(-1);
    if (tail[0] != 0) return NotOfCandidateForm{"lambda(g, v2) has a nonzero g^1 coefficient"};
    GroupAlgebraElement a = tail;
    a.set(0, params.kappa_l().row(0)[0]);

    auto rebuilt = build_candidate(a, b);
    rebuilt.kappa_c() = params.kappa_c();
    if (!(rebuilt == params)) return NotOfCandidateForm{"tables differ from the candidate built from (a, b)"};
    return CandidatePair{a, b};
}

std::string pretty_print(DeformationParams const& params)
{
    std::string out = "p = " + std::to_string(params.p()) + "\n";
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < params.p(); ++i)
            out += "lambda(g^" + std::to_string(i) + ", v" + std::to_string(j + 1) +
                   ") = " + to_string(params.lambda(i, j)) + "\n";
    out += "kappaC(v1, v2) = " + to_string(params.kappa_c()) + "\n";
    out += "kappaL(v1, v2) = " + to_string(params.kappa_l()) + "\n";
    return out;
}

}  // namespace orbifold
