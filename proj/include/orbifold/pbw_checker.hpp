#pragma once

/**
 * @file pbw_checker.hpp
 * @brief Direct evaluation of the six PBW conditions on a DeformationParams.
 *
 * Each check returns its failing witnesses in lexicographic order of the
 * group exponents. Conditions 2 and 3 are antisymmetric in (u, v) and are
 * evaluated at (u, v) = (v1, v2); condition 6 is swept over all ordered
 * basis triples. Conditions 4 and 5 hold identically when dim V = 2.
 */

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "orbifold/parameters.hpp"

namespace orbifold {

using Residual = std::variant<GroupAlgebraElement, Vector, Quad2GroupElement>;

struct Witness {
    std::vector<int> group_exponents;
    std::vector<int> basis_vectors;  ///< 1 for v1, 2 for v2
    Residual residual;
};

struct ConditionResult {
    int condition = 0;
    bool passed = true;
    std::vector<Witness> witnesses;
    std::string note;
};

struct ConditionReport {
    std::array<ConditionResult, 6> conditions;

    bool passed() const noexcept;
    ConditionResult const& operator[](int condition) const { return conditions.at(static_cast<std::size_t>(condition - 1)); }
};

/// lambda(gh, v) = lambda(g, ^h v) h + g lambda(h, v).
ConditionResult check_condition1(DeformationParams const& params);
/// kappa^C(^g u, ^g v) g - g kappa^C(u, v)
///   = lambda(lambda(g, v), u) - lambda(lambda(g, u), v) + sum_a lambda(g, kappa^L_a(u, v)) a.
ConditionResult check_condition2(DeformationParams const& params);
/// ^g(kappa^L_{g^-1 h}(u, v)) - kappa^L_{h g^-1}(^g u, ^g v)
///   = (^h v - ^g v) lambda_h(g, u) - (^h u - ^g u) lambda_h(g, v).
ConditionResult check_condition3(DeformationParams const& params);
ConditionResult check_condition4(DeformationParams const& params);
ConditionResult check_condition5(DeformationParams const& params);
/// kappa^L_g(u, v)(w - ^g w) + kappa^L_g(v, w)(u - ^g u) + kappa^L_g(w, u)(v - ^g v) = 0.
ConditionResult check_condition6(DeformationParams const& params);

ConditionReport check_all(DeformationParams const& params);

std::string to_string(Residual const& r);

}  // namespace orbifold
