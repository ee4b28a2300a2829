#include "orbifold/field.hpp"

#include <cstdlib>
#include <map>
#include <vector>

namespace orbifold {

MismatchedPrime::MismatchedPrime(int p, int q)
    : Error("operands live over different primes (" + std::to_string(p) + " vs " +
            std::to_string(q) + ")")
{
}

ParseError::ParseError(std::string message, std::size_t position)
    : Error(message + " at offset " + std::to_string(position)), position_(position)
{
}

bool is_prime(int n) noexcept
{
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(int p, int ceiling) : p_(p)
{
    if (!is_prime(p) || p == 2)
        throw Error("p must be an odd prime, got " + std::to_string(p));
    if (p > ceiling)
        throw Error("p = " + std::to_string(p) + " exceeds the ceiling " + std::to_string(ceiling));
}

namespace fp {

Scalar pow(Scalar base, std::uint64_t exponent, int p) noexcept
{
    std::int64_t result = 1 % p;
    std::int64_t b = reduce(base, p);
    while (exponent > 0) {
        if (exponent & 1U) result = (result * b) % p;
        b = (b * b) % p;
        exponent >>= 1U;
    }
    // 0^0 is 1, but fermat_inverse never asks for it since p - 2 >= 1.
    return static_cast<Scalar>(result);
}

namespace {

// Pascal's triangle mod p, rows 0..p-1. Addition commutes with reduction, so
// every entry is the exact integer binomial reduced mod p.
const std::vector<std::vector<Scalar>>& pascal_rows(int p)
{
    thread_local std::map<int, std::vector<std::vector<Scalar>>> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(p));
    for (int n = 0; n < p; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = add(rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1],
                                                   rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)], p);
    }
    return cache.emplace(p, std::move(rows)).first->second;
}

}  // namespace

Scalar binomial(std::int64_t n, std::int64_t k, int p)
{
    if (n < 0 || k < 0 || k > n) return 0;
    const auto& rows = pascal_rows(p);
    Scalar result = 1;
    while (k > 0) {
        const auto nd = n % p;
        const auto kd = k % p;
        if (kd > nd) return 0;
        result = mul(result, rows[static_cast<std::size_t>(nd)][static_cast<std::size_t>(kd)], p);
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace fp

int guard_ceiling(int default_ceiling)
{
    if (const char* env = std::getenv("ORBIFOLD_MAX_P")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return default_ceiling;
}

}  // namespace orbifold
