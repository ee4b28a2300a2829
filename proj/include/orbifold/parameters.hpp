#pragma once

/**
 * @file parameters.hpp
 * @brief Deformation parameters (lambda, kappa) and their constructors.
 *
 * lambda is stored on pairs (g^i, v_j) only; the evaluation helpers extend
 * it bilinearly (left-linearly in the F_pG argument). kappa is stored as its
 * value on (v1, v2) and extended antisymmetrically.
 */

#include <string>
#include <variant>
#include <vector>

#include "orbifold/action.hpp"

namespace orbifold {

class DeformationParams {
public:
    explicit DeformationParams(Prime p);

    Prime prime() const noexcept { return kappa_c_.prime(); }
    int p() const noexcept { return kappa_c_.p(); }

    /// lambda(g^i, v_{j+1}), i reduced mod p.
    GroupAlgebraElement const& lambda(std::int64_t i, int j) const;
    GroupAlgebraElement& lambda(std::int64_t i, int j);

    GroupAlgebraElement const& kappa_c() const noexcept { return kappa_c_; }
    GroupAlgebraElement& kappa_c() noexcept { return kappa_c_; }
    VGroupElement const& kappa_l() const noexcept { return kappa_l_; }
    VGroupElement& kappa_l() noexcept { return kappa_l_; }

    /// lambda(g^i, v) for arbitrary v in V.
    GroupAlgebraElement lambda_at(std::int64_t i, Vector v) const;
    /// lambda(x, v) for x in F_pG, extended linearly in x.
    GroupAlgebraElement lambda_at(GroupAlgebraElement const& x, Vector v) const;

    /// kappa^C(u, w) = det[u w] kappa^C(v1, v2).
    GroupAlgebraElement kappa_c_at(Vector u, Vector w) const;
    /// kappa^L(u, w) = det[u w] kappa^L(v1, v2).
    VGroupElement kappa_l_at(Vector u, Vector w) const;

    DeformationParams& operator+=(DeformationParams const& other);

    friend bool operator==(DeformationParams const&, DeformationParams const&) = default;

private:
    std::vector<GroupAlgebraElement> lambda_;  // index 2*i + j
    GroupAlgebraElement kappa_c_;
    VGroupElement kappa_l_;
};

/// f: V -> F_pG given on the basis. Only f(v1) affects the coboundary.
struct CoboundaryData {
    GroupAlgebraElement f1;
    GroupAlgebraElement f2;
};

/// The candidate parameters attached to (a, b) with kappa^C = 0:
///   lambda(g^i, v1) = i b g^i
///   lambda(g^i, v2) = C(i,2) b g^i + i (sum_{j>=1} a_j g^j) g^i
///   kappa^L(v1, v2) = a_0 v1 + sum_j j b_j v2 g^j
DeformationParams build_candidate(GroupAlgebraElement const& a, GroupAlgebraElement const& b);

/// Adds the coboundary of f:
///   lambda(g^i, v2) += -i f(v1) g^i,  kappa^L(v1, v2) += sum_j j f_j(v1) v1 g^j.
DeformationParams add_coboundary(DeformationParams params, CoboundaryData const& f);

/// mu(d, j) = (-1)^(p-j) sum_{t=1}^{k} (-1)^(t+1) C(p-t, p-j) d_t.
Scalar mu(std::span<Scalar const> d, int j, Prime p);

/// a_0 = d_1 - d_2 + ... ; a_j = j^(p-2) (mu(d, j) + C(j+1, 2) b_j).
GroupAlgebraElement implied_a(GroupAlgebraElement const& b, std::span<Scalar const> d);

/// Closed-form parameters for (b, d, kappa^C). Throws Error when d does not
/// have exactly k = gminus1_factor(b).k entries.
DeformationParams closed_form(GroupAlgebraElement const& b, std::span<Scalar const> d,
                              GroupAlgebraElement const& kappa_c);

struct CandidatePair {
    GroupAlgebraElement a;
    GroupAlgebraElement b;
};

struct NotOfCandidateForm {
    std::string reason;
};

/// Recovers (a, b) when lambda and kappa^L have exactly the candidate shape.
/// kappa^C is unconstrained by the shape and is ignored.
std::variant<CandidatePair, NotOfCandidateForm> params_to_ab(DeformationParams const& params);

/// Stable multi-line rendering used by golden files and the CLI.
std::string pretty_print(DeformationParams const& params);

}  // namespace orbifold
