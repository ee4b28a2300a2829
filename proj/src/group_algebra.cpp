#include "orbifold/group_algebra.hpp"

#include <algorithm>
#include <cctype>

namespace orbifold {

namespace {

void require_same(GroupAlgebraElement const& x, GroupAlgebraElement const& y)
{
    if (x.p() != y.p()) throw MismatchedPrime(x.p(), y.p());
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(Prime p)
    : p_(p), coeffs_(static_cast<std::size_t>(p.value()), 0)
{
}

GroupAlgebraElement::GroupAlgebraElement(Prime p, std::vector<std::int64_t> const& coeffs)
    : GroupAlgebraElement(p)
{
    if (coeffs.size() != coeffs_.size())
        throw Error("expected " + std::to_string(p.value()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = fp::reduce(coeffs[i], p);
}

GroupAlgebraElement GroupAlgebraElement::group(Prime p, std::int64_t i)
{
    GroupAlgebraElement x(p);
    x.set(i, 1);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::gminus1_power(Prime p, int k)
{
    GroupAlgebraElement x(p);
    if (k >= p.value()) return x;
    // (g-1)^k = sum_j C(k, j) (-1)^(k-j) g^j
    for (int j = 0; j <= k; ++j)
        x.coeffs_[static_cast<std::size_t>(j)] = fp::mul(fp::binomial(k, j, p), fp::sign(k - j, p), p);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::from_index(Prime p, std::uint64_t index)
{
    GroupAlgebraElement x(p);
    for (int i = p.value() - 1; i >= 0; --i) {
        x.coeffs_[static_cast<std::size_t>(i)] = static_cast<Scalar>(index % static_cast<std::uint64_t>(p.value()));
        index /= static_cast<std::uint64_t>(p.value());
    }
    return x;
}

std::uint64_t GroupAlgebraElement::index() const noexcept
{
    std::uint64_t idx = 0;
    for (Scalar c : coeffs_) idx = idx * static_cast<std::uint64_t>(p()) + static_cast<std::uint64_t>(c);
    return idx;
}

void GroupAlgebraElement::set(std::int64_t i, std::int64_t value)
{
    coeffs_[static_cast<std::size_t>(fp::reduce(i, p()))] = fp::reduce(value, p());
}

void GroupAlgebraElement::accumulate(std::int64_t i, std::int64_t value)
{
    auto& c = coeffs_[static_cast<std::size_t>(fp::reduce(i, p()))];
    c = fp::add(c, fp::reduce(value, p()), p());
}

bool GroupAlgebraElement::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Scalar c) { return c == 0; });
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(GroupAlgebraElement const& other)
{
    require_same(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = fp::add(coeffs_[i], other.coeffs_[i], p());
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(GroupAlgebraElement const& other)
{
    require_same(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = fp::sub(coeffs_[i], other.coeffs_[i], p());
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(GroupAlgebraElement const& other)
{
    *this = *this * other;
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Scalar s)
{
    s = fp::reduce(s, p());
    for (auto& c : coeffs_) c = fp::mul(c, s, p());
    return *this;
}

GroupAlgebraElement operator*(GroupAlgebraElement const& x, GroupAlgebraElement const& y)
{
    require_same(x, y);
    const auto n = static_cast<std::size_t>(x.p());
    // Accumulate unreduced; p <= 97 keeps n * (p-1)^2 far inside int64.
    std::vector<std::int64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t l = i + j;
            if (l >= n) l -= n;
            acc[l] += static_cast<std::int64_t>(x.coeffs_[i]) * y.coeffs_[j];
        }
    }
    GroupAlgebraElement r(x.p_);
    for (std::size_t l = 0; l < n; ++l) r.coeffs_[l] = fp::reduce(acc[l], x.p());
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const
{
    GroupAlgebraElement r(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = fp::neg(coeffs_[i], p());
    return r;
}

GroupAlgebraElement GroupAlgebraElement::shifted(std::int64_t i) const
{
    GroupAlgebraElement r(p_);
    const auto s = static_cast<std::size_t>(fp::reduce(i, p()));
    const auto n = coeffs_.size();
    for (std::size_t j = 0; j < n; ++j) r.coeffs_[(j + s) % n] = coeffs_[j];
    return r;
}

std::strong_ordering operator<=>(GroupAlgebraElement const& x, GroupAlgebraElement const& y)
{
    if (auto c = x.p() <=> y.p(); c != 0) return c;
    return std::lexicographical_compare_three_way(x.coeffs_.begin(), x.coeffs_.end(), y.coeffs_.begin(),
                                                  y.coeffs_.end());
}

GroupAlgebraElement add(GroupAlgebraElement const& x, GroupAlgebraElement const& y) { return x + y; }
GroupAlgebraElement mul(GroupAlgebraElement const& x, GroupAlgebraElement const& y) { return x * y; }

GroupAlgebraElement sigma(GroupAlgebraElement const& x)
{
    GroupAlgebraElement r(x.prime());
    for (int i = 0; i < x.p(); ++i) r.set(-i, x[i]);
    return r;
}

Scalar augmentation(GroupAlgebraElement const& x)
{
    std::int64_t s = 0;
    for (Scalar c : x.coeffs()) s += c;
    return fp::reduce(s, x.p());
}

std::vector<Scalar> basis_change_to_gminus1(GroupAlgebraElement const& x)
{
    // g^j = (1 + (g-1))^j = sum_i C(j, i) (g-1)^i
    const int p = x.p();
    std::vector<Scalar> z(static_cast<std::size_t>(p), 0);
    for (int j = 0; j < p; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i <= j; ++i)
            z[static_cast<std::size_t>(i)] = fp::add(z[static_cast<std::size_t>(i)], fp::mul(x[j], fp::binomial(j, i, p), p), p);
    }
    return z;
}

GroupAlgebraElement from_gminus1_basis(Prime p, std::span<Scalar const> z)
{
    if (z.size() != static_cast<std::size_t>(p.value()))
        throw Error("expected " + std::to_string(p.value()) + " (g-1)-coordinates");
    GroupAlgebraElement x(p);
    for (int i = 0; i < p.value(); ++i) {
        const Scalar zi = fp::reduce(z[static_cast<std::size_t>(i)], p);
        if (zi == 0) continue;
        x += GroupAlgebraElement::gminus1_power(p, i) * zi;
    }
    return x;
}

Factorization gminus1_factor(GroupAlgebraElement const& x)
{
    const int p = x.p();
    const auto z = basis_change_to_gminus1(x);
    int k = 0;
    while (k < p && z[static_cast<std::size_t>(k)] == 0) ++k;
    if (k == p) return {p, GroupAlgebraElement::one(x.prime())};
    // btilde = sum_{i >= k} z_i (g-1)^(i-k); its augmentation is z_k.
    std::vector<Scalar> shifted(static_cast<std::size_t>(p), 0);
    for (int i = k; i < p; ++i) shifted[static_cast<std::size_t>(i - k)] = z[static_cast<std::size_t>(i)];
    return {k, from_gminus1_basis(x.prime(), shifted)};
}

GroupAlgebraElement invert(GroupAlgebraElement const& x)
{
    if (augmentation(x) == 0) throw NotAUnit();
    const int p = x.p();
    const auto n = static_cast<std::size_t>(p);
    // Row l of the circulant: (x * y)_l = sum_j x_{l-j} y_j. Augmented with e_0.
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n + 1, 0));
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) m[l][j] = x[static_cast<std::int64_t>(l) - static_cast<std::int64_t>(j)];
        m[l][n] = (l == 0) ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw NotAUnit();  // unreachable for units
        std::swap(m[col], m[pivot]);
        const Scalar inv = fp::fermat_inverse(m[col][col], p);
        for (auto& v : m[col]) v = fp::mul(v, inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Scalar f = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] = fp::sub(m[r][c], fp::mul(f, m[col][c], p), p);
        }
    }
    GroupAlgebraElement y(x.prime());
    for (std::size_t j = 0; j < n; ++j) y.set(static_cast<std::int64_t>(j), m[j][n]);
    return y;
}

std::string to_string(GroupAlgebraElement const& x)
{
    std::string out;
    for (int i = 0; i < x.p(); ++i) {
        const Scalar c = x[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c);
        if (i == 1)
            out += "*g";
        else if (i > 1)
            out += "*g^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, Prime p) : text_(text), p_(p) {}

    GroupAlgebraElement parse()
    {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty group-algebra element", pos_);
        auto value = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return value;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_factor_start()
    {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == 'g' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    GroupAlgebraElement expr()
    {
        GroupAlgebraElement acc(p_);
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            auto t = term();
            acc += negate ? -t : t;
            if (peek('+') || peek('-')) {
                negate = text_[pos_] == '-';
                ++pos_;
                continue;
            }
            return acc;
        }
    }

    GroupAlgebraElement term()
    {
        auto acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    GroupAlgebraElement factor()
    {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return GroupAlgebraElement::one(p_) * number();
        }
        if (c == 'g') {
            ++pos_;
            std::int64_t e = 1;
            if (peek('^')) {
                ++pos_;
                e = signed_integer();
            }
            return GroupAlgebraElement::group(p_, e);
        }
        if (c == '(') {
            const auto open = pos_;
            ++pos_;
            auto inner = expr();
            if (!peek(')')) throw ParseError("unbalanced '('", open);
            ++pos_;
            if (peek('^')) {
                ++pos_;
                const auto e = unsigned_integer();
                auto base = inner;
                inner = GroupAlgebraElement::one(p_);
                for (std::int64_t i = 0; i < e; ++i) inner = inner * base;
            }
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Scalar number()
    {
        std::int64_t v = 0;
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = (v * 10 + (text_[pos_] - '0')) % p_.value();
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return static_cast<Scalar>(v);
    }

    std::int64_t unsigned_integer()
    {
        skip_space();
        const auto start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 1'000'000) throw ParseError("exponent too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an exponent", pos_);
        return v;
    }

    std::int64_t signed_integer()
    {
        bool negative = false;
        if (peek('-')) {
            negative = true;
            ++pos_;
        }
        const auto v = unsigned_integer();
        return negative ? -v : v;
    }

    std::string_view text_;
    Prime p_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupAlgebraElement parse_element(std::string_view text, Prime p) { return ElementParser(text, p).parse(); }

}  // namespace orbifold
