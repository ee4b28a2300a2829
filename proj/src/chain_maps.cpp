#include "orbifold/chain_maps.hpp"

#include <algorithm>
#include <optional>

#include "orbifold/parallel.hpp"

namespace orbifold {

void BarGroupChain::add_term(ExponentTuple e, std::int64_t coeff)
{
    if (static_cast<int>(e.size()) != degree_ + 2)
        throw Error("bar tensor of degree " + std::to_string(degree_) + " needs " + std::to_string(degree_ + 2) +
                    " slots");
    const int p = p_.value();
    for (auto& x : e) x = fp::reduce(x, p);
    for (std::size_t k = 1; k + 1 < e.size(); ++k)
        if (e[k] == 0) return;
    const Scalar c = fp::reduce(coeff, p);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (inserted) return;
    it->second = fp::add(it->second, c, p);
    if (it->second == 0) terms_.erase(it);
}

void BarGroupChain::add_scaled(BarGroupChain const& other, Scalar s)
{
    if (other.p_ != p_) throw MismatchedPrime(p_.value(), other.p_.value());
    for (auto const& [e, c] : other.terms_) add_term(e, fp::mul(c, s, p_.value()));
}

BarGroupChain BarGroupChain::multiplied(int left, int right) const
{
    BarGroupChain out(p_, degree_);
    for (auto const& [tuple, c] : terms_) {
        ExponentTuple e = tuple;
        e.front() += left;
        e.back() += right;
        out.add_term(std::move(e), c);
    }
    return out;
}

int BarGroupChain::grade() const
{
    int grade = -1;
    for (auto const& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        s = fp::reduce(s, p_.value());
        if (grade >= 0 && s != grade) return -1;
        grade = s;
    }
    return grade;
}

PeriodicChain::PeriodicChain(Prime p, int degree)
    : p_(p), degree_(degree), entries_(static_cast<std::size_t>(p.value() * p.value()), 0)
{
}

Scalar PeriodicChain::at(int i, int j) const
{
    const int p = p_.value();
    return entries_[static_cast<std::size_t>(fp::reduce(i, p) * p + fp::reduce(j, p))];
}

void PeriodicChain::add(int i, int j, std::int64_t coeff)
{
    const int p = p_.value();
    auto& slot = entries_[static_cast<std::size_t>(fp::reduce(i, p) * p + fp::reduce(j, p))];
    slot = fp::add(slot, fp::reduce(coeff, p), p);
}

void PeriodicChain::add_scaled(PeriodicChain const& other, Scalar s)
{
    if (other.p_ != p_) throw MismatchedPrime(p_.value(), other.p_.value());
    const int p = p_.value();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) add(i, j, fp::mul(other.at(i, j), s, p));
}

PeriodicChain PeriodicChain::multiplied(int left, int right) const
{
    PeriodicChain out(p_, degree_);
    const int p = p_.value();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) out.add(i + left, j + right, at(i, j));
    return out;
}

bool PeriodicChain::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](Scalar c) { return c == 0; });
}

int PeriodicChain::grade() const
{
    const int p = p_.value();
    const int shift = degree_ % 2 == 1 ? 1 : 0;
    int grade = -1;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (at(i, j) == 0) continue;
            const int h = fp::reduce(i + j + shift, p);
            if (grade >= 0 && h != grade) return -1;
            grade = h;
        }
    }
    return grade;
}

std::string to_string(BarGroupChain const& x)
{
    if (x.is_zero()) return "0";
    std::string out;
    for (auto const& [e, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*[";
        for (std::size_t k = 0; k < e.size(); ++k) out += (k ? "|g^" : "g^") + std::to_string(e[k]);
        out += "]";
    }
    return out;
}

std::string to_string(PeriodicChain const& x)
{
    if (x.is_zero()) return "0";
    std::string out;
    const int p = x.prime().value();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (x.at(i, j) != 0) {
                if (!out.empty()) out += " + ";
                out += std::to_string(x.at(i, j)) + "*g^" + std::to_string(i) + "(x)g^" + std::to_string(j);
            }
    return out;
}

BarGroupChain bar_differential(BarGroupChain const& x)
{
    const int n = x.degree();
    if (n < 1) throw Error("the bar differential starts in degree 1");
    const int p = x.prime().value();
    BarGroupChain out(x.prime(), n - 1);
    for (auto const& [e, c] : x.terms()) {
        for (int i = 0; i <= n; ++i) {
            ExponentTuple merged;
            merged.reserve(e.size() - 1);
            for (int k = 0; k < static_cast<int>(e.size()); ++k) {
                if (k == i + 1) continue;
                merged.push_back(k == i ? e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k + 1)]
                                        : e[static_cast<std::size_t>(k)]);
            }
            out.add_term(std::move(merged), fp::mul(c, fp::sign(i, p), p));
        }
    }
    return out;
}

PeriodicChain periodic_differential(PeriodicChain const& x)
{
    const int n = x.degree();
    if (n < 1) throw Error("use periodic_multiplication in degree 0");
    const int p = x.prime().value();
    PeriodicChain out(x.prime(), n - 1);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const Scalar c = x.at(i, j);
            if (c == 0) continue;
            if (n % 2 == 1) {
                out.add(i + 1, j, c);
                out.add(i, j + 1, p - c);
            } else {
                for (int l = 0; l < p; ++l) out.add(i + l, j + p - 1 - l, c);
            }
        }
    }
    return out;
}

GroupAlgebraElement periodic_multiplication(PeriodicChain const& x)
{
    const int p = x.prime().value();
    GroupAlgebraElement out(x.prime());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) out.accumulate(i + j, x.at(i, j));
    return out;
}

namespace {

/// pi on 1 (x) g^(e_1) (x) ... (x) g^(e_n) (x) 1, inner exponents in [1, p).
PeriodicChain pi_generator(Prime p, int n, std::span<int const> inner)
{
    PeriodicChain out(p, n);
    const int q = p.value();
    if (n == 0) {
        out.add(0, 0, 1);
        return out;
    }
    // Pair sums start at index 0 in even degree and at index 1 in odd degree.
    const std::size_t start = n % 2 == 0 ? 0 : 1;
    int right = 0;
    for (std::size_t t = start; t + 1 < inner.size(); t += 2) {
        const int s = inner[t] + inner[t + 1] - q;
        if (s < 0) return out;
        right += s;
    }
    if (n % 2 == 0) {
        out.add(0, right, 1);
    } else {
        for (int l = 0; l < inner[0]; ++l) out.add(l, inner[0] - l - 1 + right, 1);
    }
    return out;
}

}  // namespace

PeriodicChain pi_group(BarGroupChain const& x)
{
    const int n = x.degree();
    PeriodicChain out(x.prime(), n);
    for (auto const& [e, c] : x.terms()) {
        const std::span<int const> inner(e.data() + 1, e.size() - 2);
        out.add_scaled(pi_generator(x.prime(), n, inner).multiplied(e.front(), e.back()), c);
    }
    return out;
}

BarGroupChain iota_group(Prime p, int n, IotaReading reading)
{
    const int q = p.value();
    BarGroupChain out(p, n);
    const int k = n / 2;
    std::vector<int> idx(static_cast<std::size_t>(k), 1);  // idx[t] holds i_(t+1)
    while (true) {
        ExponentTuple e{0};
        if (n % 2 == 1) e.push_back(1);
        int sum = 0;
        for (int t = k; t >= 1; --t) {
            e.push_back(idx[static_cast<std::size_t>(t - 1)]);
            e.push_back(1);
            sum += idx[static_cast<std::size_t>(t - 1)];
        }
        e.push_back(reading == IotaReading::general ? k * q - sum - k : 0);
        out.add_term(std::move(e), 1);

        int t = k - 1;
        while (t >= 0 && ++idx[static_cast<std::size_t>(t)] == q) idx[static_cast<std::size_t>(t--)] = 1;
        if (t < 0) break;
    }
    return out;
}

BarGroupChain iota_group(PeriodicChain const& x, IotaReading reading)
{
    const int p = x.prime().value();
    const auto base = iota_group(x.prime(), x.degree(), reading);
    BarGroupChain out(x.prime(), x.degree());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (x.at(i, j) != 0) out.add_scaled(base.multiplied(i, j), x.at(i, j));
    return out;
}

bool ChainMapReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](ChainCheck const& c) { return c.passed; });
}

namespace {

ExponentTuple decode_inner(std::uint64_t index, int n, int p)
{
    ExponentTuple inner(static_cast<std::size_t>(n));
    for (int t = n - 1; t >= 0; --t) {
        inner[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::uint64_t>(p - 1)) + 1;
        index /= static_cast<std::uint64_t>(p - 1);
    }
    return inner;
}

BarGroupChain bar_generator(Prime p, ExponentTuple const& inner)
{
    BarGroupChain out(p, static_cast<int>(inner.size()));
    ExponentTuple e{0};
    e.insert(e.end(), inner.begin(), inner.end());
    e.push_back(0);
    out.add_term(std::move(e), 1);
    return out;
}

PeriodicChain periodic_unit(Prime p, int n)
{
    PeriodicChain out(p, n);
    out.add(0, 0, 1);
    return out;
}

/// Sweeps every generator of B_n and returns the first one where fails() holds.
template <typename Predicate>
std::optional<ExponentTuple> first_failing_generator(Prime p, int n, unsigned workers, Predicate fails)
{
    std::uint64_t count = 1;
    for (int t = 0; t < n; ++t) count *= static_cast<std::uint64_t>(p.value() - 1);
    const unsigned w = std::max(1U, workers);
    std::vector<std::optional<ExponentTuple>> found(w);
    parallel_chunks(count, w, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            auto inner = decode_inner(idx, n, p.value());
            if (fails(inner)) {
                found[worker] = std::move(inner);
                return;
            }
        }
    });
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

void record(ChainMapReport& report, std::string identity, int degree, std::optional<ExponentTuple> witness)
{
    ChainCheck check{std::move(identity), degree, !witness.has_value(), {}};
    if (witness) check.witness = std::move(*witness);
    report.checks.push_back(std::move(check));
}

std::optional<ExponentTuple> failure_if(bool failed)
{
    return failed ? std::optional<ExponentTuple>(ExponentTuple{}) : std::nullopt;
}

}  // namespace

ChainMapReport verify_chain_maps(Prime p, int max_degree, IotaReading reading, unsigned workers)
{
    if (max_degree < 0 || max_degree > kChainDegreeCeiling)
        throw TooLarge("chain-map verification is limited to degrees 0.." + std::to_string(kChainDegreeCeiling) +
                       " (got " + std::to_string(max_degree) + ")");
    ChainMapReport report{p.value(), max_degree, {}};

    for (int n = 0; n <= max_degree; ++n) {
        const auto unit = periodic_unit(p, n);
        const auto iota = iota_group(p, n, reading);

        record(report, "pi iota = id", n, failure_if(!(pi_group(iota) == unit)));
        record(report, "iota grading", n, failure_if(iota.grade() != unit.grade()));
        record(report, "pi grading", n, first_failing_generator(p, n, workers, [&](ExponentTuple const& inner) {
                   const auto image = pi_group(bar_generator(p, inner));
                   return !image.is_zero() && image.grade() != bar_generator(p, inner).grade();
               }));

        if (n == 0) continue;

        // Differentials square to zero.
        if (n == 1) {
            record(report, "d^2", n, failure_if(!periodic_multiplication(periodic_differential(unit)).is_zero()));
            record(report, "delta^2", n, first_failing_generator(p, n, workers, [&](ExponentTuple const& inner) {
                       const auto d = bar_differential(bar_generator(p, inner));
                       GroupAlgebraElement m(p);
                       for (auto const& [e, c] : d.terms()) m.accumulate(e[0] + e[1], c);
                       return !m.is_zero();
                   }));
        } else {
            record(report, "d^2", n, failure_if(!periodic_differential(periodic_differential(unit)).is_zero()));
            record(report, "delta^2", n, first_failing_generator(p, n, workers, [&](ExponentTuple const& inner) {
                       return !bar_differential(bar_differential(bar_generator(p, inner))).is_zero();
                   }));
        }

        record(report, "d pi = pi delta", n, first_failing_generator(p, n, workers, [&](ExponentTuple const& inner) {
                   const auto gen = bar_generator(p, inner);
                   return !(periodic_differential(pi_group(gen)) == pi_group(bar_differential(gen)));
               }));
        record(report, "delta iota = iota d", n,
               failure_if(!(bar_differential(iota) == iota_group(periodic_differential(unit), reading))));
    }

    // The mixed piece of the twisted resolutions in degree 2.
    if (max_degree >= 2) {
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j) {
            const Vector v = basis_vector(j);
            const auto [s, w] = iota2_mixed(v);
            const auto terms = pi2_mixed(p, s, w);
            ok = terms.size() == 1 && terms[0].left == 0 && terms[0].right == 0 && terms[0].v == v;
        }
        record(report, "pi iota = id (mixed)", 2, failure_if(!ok));
    }
    return report;
}

std::vector<MixedTerm> pi2_mixed(Prime p, int s, Vector v, int first_index)
{
    std::vector<MixedTerm> out;
    s = fp::reduce(s, p.value());
    for (int l = first_index; l <= s - 1; ++l) out.push_back(MixedTerm{s - 1 - l, act(p, l, v), l});
    return out;
}

std::pair<int, Vector> iota2_mixed(Vector v) { return {1, v}; }

TwistedCochain2::TwistedCochain2(Prime p)
    : on_group_pairs(static_cast<std::size_t>(p.value() * p.value()), GroupAlgebraElement(p)),
      on_group_vector(static_cast<std::size_t>(2 * p.value()), GroupAlgebraElement(p)),
      on_wedge(p)
{
}

GroupAlgebraElement const& TwistedCochain2::group_vector(int i, int j) const
{
    return on_group_vector.at(static_cast<std::size_t>(2 * i + j));
}

CochainX distinguished_cocycle(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    if (a.p() != b.p()) throw MismatchedPrime(a.p(), b.p());
    const Prime p = a.prime();
    GroupAlgebraElement a_tail = a;
    a_tail.set(0, 0);
    VGroupElement alpha(p);
    alpha.row(0).set(0, a[0]);
    for (int l = 0; l < p.value(); ++l) alpha.row(1).set(l, fp::mul(l, b[l], p));
    return CochainX{b.shifted(1), a_tail.shifted(1), alpha};
}

TwistedCochain2 transfer_cochain(CochainX const& gamma)
{
    const Prime p = gamma.lambda_v1.prime();
    TwistedCochain2 out(p);
    // On group pairs, pi_2 lands in P_2 (x) K_0, where a degree -1 cochain vanishes.
    auto lambda_prime = [&](Vector v) { return gamma.lambda_v1 * v.x1 + gamma.lambda_v2 * v.x2; };
    for (int i = 0; i < p.value(); ++i) {
        for (int j = 0; j < 2; ++j) {
            GroupAlgebraElement value(p);
            for (auto const& t : pi2_mixed(p, i, basis_vector(j)))
                value += (GroupAlgebraElement::group(p, t.left) * lambda_prime(t.v)).shifted(t.right);
            out.on_group_vector[static_cast<std::size_t>(2 * i + j)] = std::move(value);
        }
    }
    out.on_wedge = gamma.alpha;
    return out;
}

DeformationParams rep_to_params(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
{
    const auto cochain = transfer_cochain(distinguished_cocycle(a, b));
    DeformationParams params(a.prime());
    for (int i = 0; i < a.p(); ++i)
        for (int j = 0; j < 2; ++j) params.lambda(i, j) = cochain.group_vector(i, j);
    params.kappa_l() = cochain.on_wedge;
    return params;
}

namespace {

/// x v in S(V) # G for x in F_pG: sum_j x_j (^(g^j) v) g^j.
VGroupElement group_times_vector(GroupAlgebraElement const& x, Vector v)
{
    VGroupElement out(x.prime());
    for (int j = 0; j < x.p(); ++j)
        if (x[j] != 0) out.add_to_column(j, scale(act(x.prime(), j, v), x[j], x.p()));
    return out;
}

/// v x in S(V) # G: sum_j x_j v g^j.
VGroupElement vector_times_group(Vector v, GroupAlgebraElement const& x)
{
    VGroupElement out(x.prime());
    for (int j = 0; j < x.p(); ++j)
        if (x[j] != 0) out.add_to_column(j, scale(v, x[j], x.p()));
    return out;
}

}  // namespace

TwistedCochain2 coboundary_cochain(CoboundaryData const& f)
{
    const Prime p = f.f1.prime();
    if (f.f2.p() != p.value()) throw MismatchedPrime(p.value(), f.f2.p());
    auto f_at = [&](Vector v) { return f.f1 * v.x1 + f.f2 * v.x2; };
    TwistedCochain2 out(p);
    // d(1 (x) g^i (x) v (x) 1) = g^i (x) v (x) 1 - 1 (x) ^(g^i) v (x) g^i plus a term
    // in the group-only piece, where f vanishes.
    for (int i = 0; i < p.value(); ++i) {
        for (int j = 0; j < 2; ++j) {
            const Vector v = basis_vector(j);
            out.on_group_vector[static_cast<std::size_t>(2 * i + j)] =
                GroupAlgebraElement::group(p, i) * f_at(v) - f_at(act(p, i, v)).shifted(i);
        }
    }
    // Koszul: d(1 (x) v1 ^ v2 (x) 1) = v1 (x) v2 - 1 (x) v2 . v1 - v2 (x) v1 + 1 (x) v1 . v2
    // where a (x) w (x) b maps to a f(w) b.
    out.on_wedge = vector_times_group(kV1, f_at(kV2)) - group_times_vector(f_at(kV2), kV1) -
                   vector_times_group(kV2, f_at(kV1)) + group_times_vector(f_at(kV1), kV2);
    return out;
}

}  // namespace orbifold
