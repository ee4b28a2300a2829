#pragma once

/**
 * @file group_algebra.hpp
 * @brief Exact arithmetic in F_p[G] for G = <g> cyclic of order p.
 *
 * Elements are dense coefficient vectors in the basis 1, g, ..., g^(p-1).
 * Multiplication is cyclic convolution. Besides the ring operations this
 * header provides the inversion g -> g^-1 (sigma), the augmentation, the
 * change of basis to powers of (g-1), and the (g-1)-adic factorization
 * x = (g-1)^k * btilde used to classify deformation parameters.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbifold/field.hpp"

namespace orbifold {

class GroupAlgebraElement {
public:
    /// The zero element over p.
    explicit GroupAlgebraElement(Prime p);
    /// Coefficients are reduced mod p; their number must equal p.
    GroupAlgebraElement(Prime p, std::vector<std::int64_t> const& coeffs);

    static GroupAlgebraElement zero(Prime p) { return GroupAlgebraElement(p); }
    static GroupAlgebraElement one(Prime p) { return group(p, 0); }
    /// g^i, with i reduced mod p.
    static GroupAlgebraElement group(Prime p, std::int64_t i);
    /// (g-1)^k; zero when k >= p.
    static GroupAlgebraElement gminus1_power(Prime p, int k);

    /// Position of x in the lexicographic order on coefficient vectors,
    /// coeffs[0] most significant. from_index inverts it.
    static GroupAlgebraElement from_index(Prime p, std::uint64_t index);
    std::uint64_t index() const noexcept;

    Prime prime() const noexcept { return p_; }
    int p() const noexcept { return p_.value(); }
    std::span<Scalar const> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of g^i, i reduced mod p.
    Scalar operator[](std::int64_t i) const noexcept
    {
        return coeffs_[static_cast<std::size_t>(fp::reduce(i, p()))];
    }
    /// Sets the coefficient of g^i (value reduced mod p).
    void set(std::int64_t i, std::int64_t value);
    /// Adds value to the coefficient of g^i.
    void accumulate(std::int64_t i, std::int64_t value);

    bool is_zero() const noexcept;

    GroupAlgebraElement& operator+=(GroupAlgebraElement const& other);
    GroupAlgebraElement& operator-=(GroupAlgebraElement const& other);
    GroupAlgebraElement& operator*=(GroupAlgebraElement const& other);
    GroupAlgebraElement& operator*=(Scalar s);

    friend GroupAlgebraElement operator+(GroupAlgebraElement x, GroupAlgebraElement const& y) { return x += y; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement x, GroupAlgebraElement const& y) { return x -= y; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement const& x, GroupAlgebraElement const& y);
    friend GroupAlgebraElement operator*(GroupAlgebraElement x, Scalar s) { return x *= s; }
    friend GroupAlgebraElement operator*(Scalar s, GroupAlgebraElement x) { return x *= s; }
    GroupAlgebraElement operator-() const;

    /// x * g^i: a cyclic shift of the coefficients.
    GroupAlgebraElement shifted(std::int64_t i) const;

    friend bool operator==(GroupAlgebraElement const&, GroupAlgebraElement const&) = default;
    friend std::strong_ordering operator<=>(GroupAlgebraElement const& x, GroupAlgebraElement const& y);

private:
    Prime p_;
    std::vector<Scalar> coeffs_;
};

GroupAlgebraElement add(GroupAlgebraElement const& x, GroupAlgebraElement const& y);
GroupAlgebraElement mul(GroupAlgebraElement const& x, GroupAlgebraElement const& y);

/// The ring automorphism induced by g -> g^-1.
GroupAlgebraElement sigma(GroupAlgebraElement const& x);

/// epsilon(x) = sum of coefficients.
Scalar augmentation(GroupAlgebraElement const& x);

struct Factorization {
    int k;                       ///< in [0, p]
    GroupAlgebraElement btilde;  ///< epsilon(btilde) != 0 whenever k < p
};

/// The unique (k, btilde) with x = (g-1)^k btilde and epsilon(btilde) != 0;
/// (p, 1) for x = 0.
Factorization gminus1_factor(GroupAlgebraElement const& x);

/// Multiplicative inverse; throws NotAUnit when epsilon(x) = 0. Solves the
/// circulant system of x over F_p.
GroupAlgebraElement invert(GroupAlgebraElement const& x);

/// Coordinates z with x = sum_i z_i (g-1)^i.
std::vector<Scalar> basis_change_to_gminus1(GroupAlgebraElement const& x);
/// Inverse of basis_change_to_gminus1.
GroupAlgebraElement from_gminus1_basis(Prime p, std::span<Scalar const> z);

/// "c0 + c1*g + c2*g^2 + ..." with zero terms omitted ("0" for zero).
std::string to_string(GroupAlgebraElement const& x);

/// Parses the textual grammar used on the command line:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer | 'g' ['^' integer] | '(' expr ')' ['^' integer]
/// Whitespace is ignored. Accepts everything to_string produces as well as
/// forms like "-1+g+g^2", "g(g-1)" and "-(g-1)^2". Throws ParseError.
GroupAlgebraElement parse_element(std::string_view text, Prime p);

}  // namespace orbifold
