#pragma once

/**
 * @file action.hpp
 * @brief The transvection g = [[1, 1], [0, 1]] acting on V = F_p^2, and the
 * coefficient spaces V, V (x) F_pG and S^2(V) (x) F_pG.
 */

#include <array>
#include <string>

#include "orbifold/group_algebra.hpp"

namespace orbifold {

/// x1 v1 + x2 v2.
struct Vector {
    Scalar x1 = 0;
    Scalar x2 = 0;

    friend bool operator==(Vector, Vector) = default;
};

inline constexpr Vector kV1{1, 0};
inline constexpr Vector kV2{0, 1};

/// Basis vector v_{index+1}, index in {0, 1}.
inline constexpr Vector basis_vector(int index) { return index == 0 ? kV1 : kV2; }

Vector add(Vector u, Vector w, int p);
Vector sub(Vector u, Vector w, int p);
Vector scale(Vector u, Scalar s, int p);

/// ^{g^i}(x1, x2) = (x1 + i x2, x2).
Vector act(Prime p, std::int64_t i, Vector v);

/// Determinant of the action matrix of g^i (always 1 for a transvection).
Scalar action_determinant(Prime p, std::int64_t i);

/// det[u w], the coordinate of u ^ w against v1 ^ v2.
Scalar wedge_coordinate(Vector u, Vector w, int p);

/// Element of V (x) F_pG: row j is the F_pG-coefficient of v_{j+1}, so
/// entry (j, i) is the coefficient of v_{j+1} g^i.
class VGroupElement {
public:
    explicit VGroupElement(Prime p) : rows_{GroupAlgebraElement(p), GroupAlgebraElement(p)} {}
    VGroupElement(GroupAlgebraElement v1, GroupAlgebraElement v2);

    Prime prime() const noexcept { return rows_[0].prime(); }
    int p() const noexcept { return rows_[0].p(); }
    GroupAlgebraElement const& row(int j) const { return rows_.at(static_cast<std::size_t>(j)); }
    GroupAlgebraElement& row(int j) { return rows_.at(static_cast<std::size_t>(j)); }
    /// The V-component at g^i.
    Vector column(std::int64_t i) const { return {rows_[0][i], rows_[1][i]}; }
    void add_to_column(std::int64_t i, Vector v);

    bool is_zero() const noexcept { return rows_[0].is_zero() && rows_[1].is_zero(); }

    VGroupElement& operator+=(VGroupElement const& other);
    VGroupElement& operator-=(VGroupElement const& other);
    friend VGroupElement operator+(VGroupElement x, VGroupElement const& y) { return x += y; }
    friend VGroupElement operator-(VGroupElement x, VGroupElement const& y) { return x -= y; }
    VGroupElement operator*(Scalar s) const;

    friend bool operator==(VGroupElement const&, VGroupElement const&) = default;

private:
    std::array<GroupAlgebraElement, 2> rows_;
};

/// Applies ^{g^h} to the V-part of every group column.
VGroupElement act_ga(VGroupElement const& x, std::int64_t h);

/// Monomial coefficients (v1^2, v1 v2, v2^2) of a quadratic form in S(V).
struct Quad2 {
    Scalar v1v1 = 0;
    Scalar v1v2 = 0;
    Scalar v2v2 = 0;

    friend bool operator==(Quad2, Quad2) = default;
};

/// Commutative product in S(V).
Quad2 sym_mul(Vector u, Vector w, int p);

/// Element of S^2(V) (x) F_pG; rows indexed by v1^2, v1 v2, v2^2.
class Quad2GroupElement {
public:
    explicit Quad2GroupElement(Prime p)
        : rows_{GroupAlgebraElement(p), GroupAlgebraElement(p), GroupAlgebraElement(p)}
    {
    }

    int p() const noexcept { return rows_[0].p(); }
    GroupAlgebraElement const& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }
    Quad2 column(std::int64_t i) const { return {rows_[0][i], rows_[1][i], rows_[2][i]}; }
    void add_to_column(std::int64_t i, Quad2 q);
    bool is_zero() const noexcept { return rows_[0].is_zero() && rows_[1].is_zero() && rows_[2].is_zero(); }

    friend bool operator==(Quad2GroupElement const&, Quad2GroupElement const&) = default;

private:
    std::array<GroupAlgebraElement, 3> rows_;
};

/// sym_mul placed in the g^0 column.
Quad2GroupElement sym_mul_ga(Prime p, Vector u, Vector w);

std::string to_string(Vector v);
/// "c*v1*g^i + ..." with zero terms omitted.
std::string to_string(VGroupElement const& x);
std::string to_string(Quad2GroupElement const& x);

}  // namespace orbifold
