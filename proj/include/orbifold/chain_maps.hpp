#pragma once

/**
 * @file chain_maps.hpp
 * @brief The reduced bar and periodic resolutions of F_pG, the comparison
 * maps pi_G and iota_G between them, and the transfer of degree -1
 * 2-cochains used to build deformation parameters.
 *
 * All bar chains have group-element coefficients in every slot; a basis
 * tensor g^(i_0) (x) g^(i_1) (x) ... (x) g^(i_(n+1)) is stored as its
 * exponent tuple. Bimodule maps are determined by their value on tensors
 * with outer exponents 0 and extended by left/right multiplication.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbifold/parameters.hpp"

namespace orbifold {

/// Largest homological degree verify_chain_maps accepts.
inline constexpr int kChainDegreeCeiling = 6;

using ExponentTuple = std::vector<int>;

class BarGroupChain {
public:
    BarGroupChain(Prime p, int degree) : p_(p), degree_(degree) {}

    Prime prime() const noexcept { return p_; }
    int degree() const noexcept { return degree_; }
    std::map<ExponentTuple, Scalar> const& terms() const noexcept { return terms_; }

    /// Adds coeff times the tensor with exponents e (length degree + 2).
    /// Tensors with an inner exponent 0 mod p are zero and are skipped.
    void add_term(ExponentTuple e, std::int64_t coeff);
    void add_scaled(BarGroupChain const& other, Scalar s);
    /// g^left * x * g^right.
    BarGroupChain multiplied(int left, int right) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Sum of all exponents mod p for a homogeneous chain; -1 when the
    /// chain mixes grades (and for zero).
    int grade() const;

    friend bool operator==(BarGroupChain const& x, BarGroupChain const& y)
    {
        return x.degree_ == y.degree_ && x.terms_ == y.terms_;
    }

private:
    Prime p_;
    int degree_;
    std::map<ExponentTuple, Scalar> terms_;
};

/// Element of P_n = F_pG (x) F_pG; entry (i, j) is the coefficient of g^i (x) g^j.
class PeriodicChain {
public:
    PeriodicChain(Prime p, int degree);

    Prime prime() const noexcept { return p_; }
    int degree() const noexcept { return degree_; }
    Scalar at(int i, int j) const;
    void add(int i, int j, std::int64_t coeff);
    void add_scaled(PeriodicChain const& other, Scalar s);
    PeriodicChain multiplied(int left, int right) const;
    bool is_zero() const noexcept;

    /// The G-grade h of a homogeneous chain: a b = h in even degree and
    /// a b = h g^-1 in odd degree. -1 for mixed or zero chains.
    int grade() const;

    friend bool operator==(PeriodicChain const&, PeriodicChain const&) = default;

private:
    Prime p_;
    int degree_;
    std::vector<Scalar> entries_;
};

std::string to_string(BarGroupChain const& x);
std::string to_string(PeriodicChain const& x);

/// delta_n: B_n -> B_(n-1), alternating sum of adjacent products; terms
/// with an inner g^0 vanish in the reduced complex. Requires degree >= 1.
BarGroupChain bar_differential(BarGroupChain const& x);

/// d_n: P_n -> P_(n-1) for n >= 1: gamma = g (x) 1 - 1 (x) g in odd degree,
/// eta = sum_l g^l (x) g^(p-1-l) in even degree.
PeriodicChain periodic_differential(PeriodicChain const& x);
/// The augmentation P_0 -> F_pG, g^i (x) g^j -> g^(i+j).
GroupAlgebraElement periodic_multiplication(PeriodicChain const& x);

/// (pi_G)_n on a bar chain of degree n.
PeriodicChain pi_group(BarGroupChain const& x);

/// Which version of the iota formula to use. general carries the trailing
/// bimodule factor g^(kp - sum i_j - k); table drops it, which is how the
/// low-degree degree-2 entry reads.
enum class IotaReading { general, table };

/// (iota_G)_n(1 (x) 1).
BarGroupChain iota_group(Prime p, int n, IotaReading reading = IotaReading::general);
/// (iota_G)_n on an arbitrary periodic chain.
BarGroupChain iota_group(PeriodicChain const& x, IotaReading reading = IotaReading::general);

struct ChainCheck {
    std::string identity;  ///< "delta^2", "d^2", "d pi = pi delta", "delta iota = iota d", "pi iota = id", "grading", ...
    int degree = 0;
    bool passed = true;
    ExponentTuple witness;  ///< the first offending basis tensor, when any
};

struct ChainMapReport {
    int p = 0;
    int max_degree = 0;
    std::vector<ChainCheck> checks;

    bool passed() const;
};

/// Verifies squares, compositions and grading for degrees 0..N on all
/// generators. Throws TooLarge when N exceeds kChainDegreeCeiling.
ChainMapReport verify_chain_maps(Prime p, int max_degree, IotaReading reading = IotaReading::general,
                                 unsigned workers = 1);

/// One term g^left (x) v (x) g^right of the mixed piece of Y_2.
struct MixedTerm {
    int left;
    Vector v;
    int right;
};

/// pi_2 on the mixed piece: 1 (x) g^s (x) v (x) 1 -> sum_{l=first}^{s-1}
/// g^(s-1-l) (x) ^(g^l) v (x) g^l. first_index is 0 for the transfer map;
/// 1 gives the other printed reading, kept for comparison.
std::vector<MixedTerm> pi2_mixed(Prime p, int s, Vector v, int first_index = 0);
/// iota_2 on the mixed piece: 1 (x) v (x) 1 -> 1 (x) g (x) v (x) 1, as (s, v).
std::pair<int, Vector> iota2_mixed(Vector v);

/// A degree -1 2-cochain on X: lambda' on V and alpha on the wedge.
struct CochainX {
    GroupAlgebraElement lambda_v1;
    GroupAlgebraElement lambda_v2;
    VGroupElement alpha;
};

/// A degree -1 2-cochain on Y, given on (g^i, g^j), (g^i, v_j) and v1 ^ v2.
struct TwistedCochain2 {
    std::vector<GroupAlgebraElement> on_group_pairs;   ///< index p i + j
    std::vector<GroupAlgebraElement> on_group_vector;  ///< index 2 i + j
    VGroupElement on_wedge;

    explicit TwistedCochain2(Prime p);
    GroupAlgebraElement const& group_vector(int i, int j) const;
};

/// The distinguished cocycle on X attached to (a, b).
CochainX distinguished_cocycle(GroupAlgebraElement const& a, GroupAlgebraElement const& b);

/// pi_2^*(gamma): evaluates gamma on pi_2 of each basis element of Y_2.
TwistedCochain2 transfer_cochain(CochainX const& gamma);

/// lambda and kappa^L read off the transferred distinguished cocycle.
DeformationParams rep_to_params(GroupAlgebraElement const& a, GroupAlgebraElement const& b);

/// The coboundary df of f: V -> F_pG on Y, computed from the bar and
/// Koszul differentials with products taken in S(V) # G.
TwistedCochain2 coboundary_cochain(CoboundaryData const& f);

}  // namespace orbifold
