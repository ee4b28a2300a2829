#pragma once

/**
 * @file field.hpp
 * @brief The prime field F_p and the small amount of number theory the
 * rest of the library leans on (binomials, Fermat inverses, guards).
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbifold {

/// A residue in [0, p). The owning object carries p.
using Scalar = std::int32_t;

/// Largest prime accepted by Prime unless the caller raises the ceiling.
inline constexpr int kDefaultPrimeCeiling = 97;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MismatchedPrime : public Error {
public:
    MismatchedPrime(int p, int q);
};

class NotAUnit : public Error {
public:
    NotAUnit() : Error("element has augmentation 0 and is not a unit") {}
};

/// A brute-force sweep was requested beyond its configured ceiling.
class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

bool is_prime(int n) noexcept;

/// An odd prime p with 3 <= p <= ceiling.
class Prime {
public:
    explicit Prime(int p, int ceiling = kDefaultPrimeCeiling);

    int value() const noexcept { return p_; }
    operator int() const noexcept { return p_; }

    friend bool operator==(Prime, Prime) = default;

private:
    int p_;
};

namespace fp {

inline Scalar reduce(std::int64_t x, int p) noexcept
{
    std::int64_t r = x % p;
    return static_cast<Scalar>(r < 0 ? r + p : r);
}

inline Scalar add(Scalar a, Scalar b, int p) noexcept
{
    Scalar s = a + b;
    return s >= p ? s - p : s;
}

inline Scalar sub(Scalar a, Scalar b, int p) noexcept
{
    Scalar s = a - b;
    return s < 0 ? s + p : s;
}

inline Scalar neg(Scalar a, int p) noexcept { return a == 0 ? 0 : p - a; }

inline Scalar mul(Scalar a, Scalar b, int p) noexcept
{
    return static_cast<Scalar>((static_cast<std::int64_t>(a) * b) % p);
}

Scalar pow(Scalar base, std::uint64_t exponent, int p) noexcept;

/// j^(p-2) mod p. Zero maps to zero, which the closed-form formulas rely on.
inline Scalar fermat_inverse(Scalar j, int p) noexcept
{
    return pow(reduce(j, p), static_cast<std::uint64_t>(p - 2), p);
}

/// C(n, k) mod p for n, k >= 0 (Lucas), with C(n, k) = 0 when k > n.
/// Digit binomials are computed exactly from Pascal's rule.
Scalar binomial(std::int64_t n, std::int64_t k, int p);

/// (-1)^e as a residue.
inline Scalar sign(std::int64_t e, int p) noexcept { return (e % 2 == 0) ? 1 : p - 1; }

}  // namespace fp

/// Ceiling for a brute-force sweep. ORBIFOLD_MAX_P, when set to a positive
/// integer, replaces the default for every guarded sweep.
int guard_ceiling(int default_ceiling);

}  // namespace orbifold
