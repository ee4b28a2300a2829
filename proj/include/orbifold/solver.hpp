#pragma once

/**
 * @file solver.hpp
 * @brief Solving the quadratic system that PBW condition 2 imposes on the
 * candidate coordinates (a, b), and classifying its solutions.
 *
 * For fixed b the system is linear in the auxiliary vector c (built from a
 * and b), and reads phi_b(c) = b * sigma(c) = 0. The kernel of phi_b is
 * spanned by the nonzero powers (g-1)^(p-j), 1 <= j <= k, where k is the
 * (g-1)-adic class of b, so each b carries p^k solutions.
 */

#include <cstdint>
#include <vector>

#include "orbifold/group_algebra.hpp"

namespace orbifold {

/// Ceiling on p for exhaustive kernel sweeps (p^p elements).
inline constexpr int kKernelSweepCeiling = 7;
/// Ceiling on p for exhaustive (a, b) pair sweeps (p^(2p) pairs).
inline constexpr int kPairSweepCeiling = 5;

struct Solution {
    GroupAlgebraElement c;
    GroupAlgebraElement a;
};

struct SolutionRecord {
    GroupAlgebraElement b;
    int k = 0;
    GroupAlgebraElement btilde;
    std::vector<GroupAlgebraElement> kernel_basis;
    std::vector<Solution> solutions;
};

struct CensusRow {
    int k = 0;
    std::uint64_t b_class_size = 0;
    std::uint64_t a_class_size_per_b = 0;
};

enum class EnumerationMode { closed_form, brute_force };

/// l-th coefficient: a_0 b_l + sum_{j+k = l mod p} b_k (-C(j+1, 2) b_j + j a_j).
GroupAlgebraElement system_residual(GroupAlgebraElement const& a, GroupAlgebraElement const& b);

/// c_0 = a_0; c_m = -C(j+1, 2) b_j + j a_j for m + j = 0 mod p, 1 <= m < p.
GroupAlgebraElement c_from_ab(GroupAlgebraElement const& a, GroupAlgebraElement const& b);

/// a_0 = c_0; a_j = j^(p-2) (c_{p-j} + C(j+1, 2) b_j).
GroupAlgebraElement a_from_c(GroupAlgebraElement const& c, GroupAlgebraElement const& b);

/// phi_b(c) = b * sigma(c).
GroupAlgebraElement phi_b(GroupAlgebraElement const& b, GroupAlgebraElement const& c);

/// The nonzero elements (g-1)^(p-j), j = 1..k, in that order.
std::vector<GroupAlgebraElement> kernel_basis(GroupAlgebraElement const& b);

/// All linear combinations of basis, coordinates iterated lexicographically.
std::vector<GroupAlgebraElement> span(Prime p, std::vector<GroupAlgebraElement> const& basis);

/// {c : phi_b(c) = 0} by exhaustive sweep, sorted. Throws TooLarge above the
/// kernel-sweep ceiling.
std::vector<GroupAlgebraElement> kernel_bruteforce(GroupAlgebraElement const& b);

/// One record per b in lexicographic order. brute_force sweeps every (a, b)
/// pair against system_residual and lists solutions in increasing a; throws
/// TooLarge above the pair-sweep ceiling.
std::vector<SolutionRecord> enumerate_solutions(Prime p, EnumerationMode mode, unsigned workers = 1);

/// The solution record for a single b (closed form).
SolutionRecord solve_for(GroupAlgebraElement const& b);

std::size_t count_solutions(std::vector<SolutionRecord> const& records);

/// Rows k = 0..p of the class census. Throws TooLarge when p^(p+1)
/// overflows 64 bits.
std::vector<CensusRow> census(Prime p);

/// b-values that share one a-set, grouped within their k-class.
struct TableRow {
    int k = 0;
    std::vector<GroupAlgebraElement> bs;
    std::vector<GroupAlgebraElement> as;
};

/// Rows ordered by k = p first, then k = 0, 1, ..., p-1; rows within a class
/// ordered by their first b.
std::vector<TableRow> solution_table(std::vector<SolutionRecord> const& records);

}  // namespace orbifold
