#pragma once

/**
 * @file rewriting.hpp
 * @brief A rewriting model of H_{lambda,kappa} = (T(V) # G) / R, used as a
 * PBW oracle that does not go through the six conditions.
 *
 * Words are strings of letter codes: 0 is v1, 1 is v2 and 1 + m is g^m for
 * 1 <= m < p. The identity of G is the empty word. Normal words have the
 * shape v1^i v2^j g^m.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbifold/parameters.hpp"

namespace orbifold {

using Letter = char;
using FreeWord = std::string;

inline constexpr Letter kLetterV1 = 0;
inline constexpr Letter kLetterV2 = 1;
inline Letter group_letter(int m) { return static_cast<Letter>(1 + m); }
inline bool is_group_letter(Letter c) { return c >= 2; }
inline int group_exponent(Letter c) { return c - 1; }

/// Number of v-letters.
int filtered_degree(FreeWord const& w);
std::string word_to_string(FreeWord const& w);
/// g^m as a word; empty for m = 0 mod p.
FreeWord group_word(int m, int p);

/// Orders words by filtered degree, then length, then letters.
struct WordOrder {
    bool operator()(FreeWord const& x, FreeWord const& y) const;
};

class NCPolynomial {
public:
    explicit NCPolynomial(Prime p) : p_(p) {}
    NCPolynomial(Prime p, FreeWord const& w) : p_(p) { add_term(w, 1); }

    Prime prime() const noexcept { return p_; }
    std::map<FreeWord, Scalar, WordOrder> const& terms() const noexcept { return terms_; }

    void add_term(FreeWord const& w, std::int64_t coeff);
    void add_scaled(NCPolynomial const& other, Scalar s);
    /// Appends suffix to every word, and prepends prefix.
    NCPolynomial wrapped(FreeWord const& prefix, FreeWord const& suffix) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    NCPolynomial& operator+=(NCPolynomial const& other)
    {
        add_scaled(other, 1);
        return *this;
    }
    NCPolynomial& operator-=(NCPolynomial const& other)
    {
        add_scaled(other, p_.value() - 1);
        return *this;
    }

    friend bool operator==(NCPolynomial const& x, NCPolynomial const& y) { return x.terms_ == y.terms_; }

private:
    Prime p_;
    std::map<FreeWord, Scalar, WordOrder> terms_;
};

std::string to_string(NCPolynomial const& x);

/// v1^i v2^j g^m.
struct NormalWord {
    int i = 0;
    int j = 0;
    int m = 0;

    FreeWord word() const;
    int degree() const noexcept { return i + j; }
    friend bool operator==(NormalWord, NormalWord) = default;
};

std::string to_string(NormalWord const& w);

/// Right-hand sides of the rewriting rules. The left-hand sides are fixed:
///   R1  g^m v1 -> v1 g^m + lambda(g^m, v1)
///   R2  g^m v2 -> m v1 g^m + v2 g^m + lambda(g^m, v2)
///   R3  v2 v1  -> v1 v2 - kappaC - kappaL
///   R4  g^m g^n -> g^(m+n)
struct RuleSet {
    Prime p;
    std::vector<NCPolynomial> group_vector;  ///< index 2 m + j for g^m v_{j+1}
    NCPolynomial commutator;                 ///< rhs of R3

    NCPolynomial const& rhs(int m, int j) const { return group_vector.at(static_cast<std::size_t>(2 * m + j)); }
};

RuleSet rules_from_params(DeformationParams const& params);

enum class Strategy { leftmost, rightmost };

/// Reduces to normal form. Results of whole words are memoized; a Reducer
/// is not thread-safe, so parallel sweeps use one per worker. When a trace
/// stream is attached, memoization is off and every step is written as
/// "word -> result  [Rk]".
class Reducer {
public:
    explicit Reducer(RuleSet const& rules, Strategy strategy = Strategy::leftmost, std::ostream* trace = nullptr);

    NCPolynomial const& reduce(FreeWord const& w);
    NCPolynomial reduce(NCPolynomial const& x);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    NCPolynomial compute(FreeWord const& w);

    RuleSet const* rules_;
    Strategy strategy_;
    std::ostream* trace_;
    std::unordered_map<FreeWord, NCPolynomial> memo_;
    NCPolynomial scratch_;
};

/// Position of the redex the strategy rewrites next, or nullopt when w is
/// a normal word.
std::optional<std::size_t> find_redex(FreeWord const& w, Strategy strategy);
bool is_irreducible(FreeWord const& w);

NCPolynomial oracle_multiply(NormalWord const& x, NormalWord const& y, Reducer& reducer);

struct AssociativityWitness {
    NormalWord x, y, z;
    NCPolynomial left;   ///< reduce(reduce(xy) z)
    NCPolynomial right;  ///< reduce(x reduce(yz))
};

struct AssociativityResult {
    bool passed = true;
    std::uint64_t triples_checked = 0;
    std::optional<AssociativityWitness> witness;
};

/// Normal words of filtered degree <= d, ordered by degree, then (i, j), then m.
std::vector<NormalWord> normal_words(int p, int d);

/// Sweeps all triples of normal words with total filtered degree <= D,
/// ordered by total degree and then by total word length, and stops at the
/// first failure in that order. Throws Error when D < 3.
AssociativityResult check_associativity(RuleSet const& rules, int degree_bound, unsigned workers = 1);

struct DimensionResult {
    bool passed = true;
    std::vector<std::uint64_t> counts;    ///< cumulative irreducible counts for d = 0..D
    std::vector<std::uint64_t> expected;  ///< p C(d+2, 2)
    bool idempotent = true;
};

/// Counts irreducible words of filtered degree <= d for d = 0..D by listing
/// every word of length <= D + 1, and checks reduce fixes each of them.
DimensionResult check_dimension(RuleSet const& rules, int degree_bound);

}  // namespace orbifold
