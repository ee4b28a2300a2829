#include "orbifold/solver.hpp"

#include <algorithm>
#include <map>

#include "orbifold/parallel.hpp"

namespace orbifold {

namespace {

std::uint64_t checked_power(int base, int exponent)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(base)) throw TooLarge("count overflows 64 bits");
        r *= static_cast<std::uint64_t>(base);
    }
    return r;
}

void require_guard(Prime p, int default_ceiling, char const* what)
{
    const int ceiling = guard_ceiling(default_ceiling);
    if (p.value() > ceiling)
        throw TooLarge(std::string(what) + " is limited to p <= " + std::to_string(ceiling) + " (got p = " +
                       std::to_string(p.value()) + "; set ORBIFOLD_MAX_P to override at your own risk)");
}

// Odometer over F_p^n in lexicographic order, last coordinate fastest.
bool advance(std::vector<Scalar>& digits, int p)
{
    for (auto i = digits.size(); i-- > 0;) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

// The residual formula evaluated on raw coefficient arrays; true iff zero.
bool residual_vanishes(std::vector<Scalar> const& a, std::vector<Scalar> const& b, std::vector<Scalar> const& binom2,
                       int p)
{
    const auto n = static_cast<std::size_t>(p);
    std::vector<std::int64_t> inner(n);
    for (std::size_t j = 0; j < n; ++j)
        inner[j] = -static_cast<std::int64_t>(binom2[j]) * b[j] + static_cast<std::int64_t>(j) * a[j];
    for (std::size_t l = 0; l < n; ++l) {
        std::int64_t s = static_cast<std::int64_t>(a[0]) * b[l];
        for (std::size_t j = 0; j < n; ++j) s += b[(l + n - j) % n] * inner[j];
        if (s % p != 0) return false;
    }
    return true;
}

std::vector<Scalar> to_vector(GroupAlgebraElement const& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

}  // namespace

GroupAlgebraElement system_residual(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    if (a.p() != b.p()) throw MismatchedPrime(a.p(), b.p());
    const Prime p = a.prime();
    const int n = p.value();
    GroupAlgebraElement r(p);
    for (int l = 0; l < n; ++l) {
        std::int64_t s = static_cast<std::int64_t>(a[0]) * b[l];
        for (int j = 0; j < n; ++j) {
            const int k = fp::reduce(l - j, n);
            s += static_cast<std::int64_t>(b[k]) *
                 (-static_cast<std::int64_t>(fp::binomial(j + 1, 2, p)) * b[j] + static_cast<std::int64_t>(j) * a[j]);
            s %= n;
        }
        r.set(l, s);
    }
    return r;
}

GroupAlgebraElement c_from_ab(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    if (a.p() != b.p()) throw MismatchedPrime(a.p(), b.p());
    const Prime p = a.prime();
    GroupAlgebraElement c(p);
    c.set(0, a[0]);
    for (int m = 1; m < p.value(); ++m) {
        const int j = p.value() - m;
        c.set(m, -static_cast<std::int64_t>(fp::binomial(j + 1, 2, p)) * b[j] + static_cast<std::int64_t>(j) * a[j]);
    }
    return c;
}

GroupAlgebraElement a_from_c(GroupAlgebraElement const& c, GroupAlgebraElement const& b)
{
    if (c.p() != b.p()) throw MismatchedPrime(c.p(), b.p());
    const Prime p = c.prime();
    GroupAlgebraElement a(p);
    a.set(0, c[0]);
    for (int j = 1; j < p.value(); ++j) {
        const Scalar inner = fp::add(c[p.value() - j], fp::mul(fp::binomial(j + 1, 2, p), b[j], p), p);
        a.set(j, fp::mul(fp::fermat_inverse(j, p), inner, p));
    }
    return a;
}

GroupAlgebraElement phi_b(GroupAlgebraElement const& b, GroupAlgebraElement const& c) { return b * sigma(c); }

std::vector<GroupAlgebraElement> kernel_basis(GroupAlgebraElement const& b)
{
    const Prime p = b.prime();
    const int k = gminus1_factor(b).k;
    std::vector<GroupAlgebraElement> basis;
    for (int j = 1; j <= k; ++j) basis.push_back(GroupAlgebraElement::gminus1_power(p, p.value() - j));
    return basis;
}

std::vector<GroupAlgebraElement> span(Prime p, std::vector<GroupAlgebraElement> const& basis)
{
    std::vector<GroupAlgebraElement> out;
    std::vector<Scalar> coords(basis.size(), 0);
    do {
        GroupAlgebraElement c(p);
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (coords[t] != 0) c += basis[t] * coords[t];
        out.push_back(std::move(c));
    } while (advance(coords, p.value()));
    return out;
}

std::vector<GroupAlgebraElement> kernel_bruteforce(GroupAlgebraElement const& b)
{
    const Prime p = b.prime();
    require_guard(p, kKernelSweepCeiling, "exhaustive kernel sweep");
    const int n = p.value();
    const auto bv = to_vector(b);
    std::vector<GroupAlgebraElement> kernel;
    std::vector<Scalar> c(static_cast<std::size_t>(n), 0);
    do {
        // (b * sigma(c))_l = sum_k b_k c_{k-l}
        bool zero = true;
        for (int l = 0; l < n && zero; ++l) {
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k) s += static_cast<std::int64_t>(bv[static_cast<std::size_t>(k)]) * c[static_cast<std::size_t>((k - l + n) % n)];
            zero = s % n == 0;
        }
        if (zero) kernel.emplace_back(p, std::vector<std::int64_t>(c.begin(), c.end()));
    } while (advance(c, n));
    return kernel;  // odometer order is already sorted
}

SolutionRecord solve_for(GroupAlgebraElement const& b)
{
    const Prime p = b.prime();
    auto [k, btilde] = gminus1_factor(b);
    SolutionRecord record{b, k, std::move(btilde), kernel_basis(b), {}};
    for (auto& c : span(p, record.kernel_basis)) {
        auto a = a_from_c(c, b);
        record.solutions.push_back(Solution{std::move(c), std::move(a)});
    }
    return record;
}

namespace {

SolutionRecord brute_force_for(GroupAlgebraElement const& b, std::vector<Scalar> const& binom2)
{
    const Prime p = b.prime();
    const int n = p.value();
    auto [k, btilde] = gminus1_factor(b);
    SolutionRecord record{b, k, std::move(btilde), kernel_basis(b), {}};
    const auto bv = to_vector(b);
    std::vector<Scalar> a(static_cast<std::size_t>(n), 0);
    do {
        if (residual_vanishes(a, bv, binom2, n)) {
            GroupAlgebraElement ae(p, std::vector<std::int64_t>(a.begin(), a.end()));
            auto c = c_from_ab(ae, b);
            record.solutions.push_back(Solution{std::move(c), std::move(ae)});
        }
    } while (advance(a, n));
    return record;
}

}  // namespace

std::vector<SolutionRecord> enumerate_solutions(Prime p, EnumerationMode mode, unsigned workers)
{
    if (mode == EnumerationMode::brute_force) require_guard(p, kPairSweepCeiling, "exhaustive pair sweep");
    const std::uint64_t total = checked_power(p.value(), p.value());

    std::vector<Scalar> binom2(static_cast<std::size_t>(p.value()));
    for (int j = 0; j < p.value(); ++j) binom2[static_cast<std::size_t>(j)] = fp::binomial(j + 1, 2, p);

    std::vector<SolutionRecord> records;
    records.reserve(total);
    std::vector<std::vector<SolutionRecord>> parts(std::max(1U, workers));
    parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        auto& out = parts[w];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const auto b = GroupAlgebraElement::from_index(p, idx);
            out.push_back(mode == EnumerationMode::closed_form ? solve_for(b) : brute_force_for(b, binom2));
        }
    });
    for (auto& part : parts)
        for (auto& r : part) records.push_back(std::move(r));
    return records;
}

std::size_t count_solutions(std::vector<SolutionRecord> const& records)
{
    std::size_t n = 0;
    for (auto const& r : records) n += r.solutions.size();
    return n;
}

std::vector<CensusRow> census(Prime p)
{
    const int n = p.value();
    checked_power(n, n + 1);
    std::vector<CensusRow> rows;
    for (int k = 0; k <= n; ++k) {
        const std::uint64_t b_size = k == n ? 1 : checked_power(n, n - k - 1) * static_cast<std::uint64_t>(n - 1);
        rows.push_back(CensusRow{k, b_size, checked_power(n, k)});
    }
    return rows;
}

std::vector<TableRow> solution_table(std::vector<SolutionRecord> const& records)
{
    if (records.empty()) return {};
    const int p = records.front().b.p();
    // key: (class order, sorted a-set)
    std::map<std::pair<int, std::vector<GroupAlgebraElement>>, std::vector<GroupAlgebraElement>> groups;
    for (auto const& r : records) {
        std::vector<GroupAlgebraElement> as;
        for (auto const& s : r.solutions) as.push_back(s.a);
        std::sort(as.begin(), as.end());
        const int order = r.k == p ? -1 : r.k;
        groups[{order, std::move(as)}].push_back(r.b);
    }
    std::vector<TableRow> rows;
    for (auto& [key, bs] : groups) {
        std::sort(bs.begin(), bs.end());
        const int k = key.first < 0 ? p : key.first;
        rows.push_back(TableRow{k, std::move(bs), key.second});
    }
    std::stable_sort(rows.begin(), rows.end(), [p](TableRow const& x, TableRow const& y) {
        const int ox = x.k == p ? -1 : x.k;
        const int oy = y.k == p ? -1 : y.k;
        if (ox != oy) return ox < oy;
        return x.bs.front() < y.bs.front();
    });
    return rows;
}

}  // namespace orbifold
