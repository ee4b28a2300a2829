#include "orbifold/rewriting.hpp"

#include <algorithm>

#include "orbifold/parallel.hpp"

namespace orbifold {

int filtered_degree(FreeWord const& w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](Letter c) { return !is_group_letter(c); }));
}

std::string word_to_string(FreeWord const& w)
{
    if (w.empty()) return "1";
    std::string out;
    for (Letter c : w) {
        if (!out.empty()) out += "*";
        if (c == kLetterV1)
            out += "v1";
        else if (c == kLetterV2)
            out += "v2";
        else if (group_exponent(c) == 1)
            out += "g";
        else
            out += "g^" + std::to_string(group_exponent(c));
    }
    return out;
}

FreeWord group_word(int m, int p)
{
    const int r = fp::reduce(m, p);
    return r == 0 ? FreeWord{} : FreeWord(1, group_letter(r));
}

bool WordOrder::operator()(FreeWord const& x, FreeWord const& y) const
{
    const int dx = filtered_degree(x);
    const int dy = filtered_degree(y);
    if (dx != dy) return dx < dy;
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

void NCPolynomial::add_term(FreeWord const& w, std::int64_t coeff)
{
    const Scalar c = fp::reduce(coeff, p_.value());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second = fp::add(it->second, c, p_.value());
    if (it->second == 0) terms_.erase(it);
}

void NCPolynomial::add_scaled(NCPolynomial const& other, Scalar s)
{
    if (other.p_ != p_) throw MismatchedPrime(p_.value(), other.p_.value());
    for (auto const& [w, c] : other.terms_) add_term(w, fp::mul(c, s, p_.value()));
}

NCPolynomial NCPolynomial::wrapped(FreeWord const& prefix, FreeWord const& suffix) const
{
    NCPolynomial out(p_);
    for (auto const& [w, c] : terms_) out.add_term(prefix + w + suffix, c);
    return out;
}

std::string to_string(NCPolynomial const& x)
{
    if (x.is_zero()) return "0";
    std::string out;
    for (auto const& [w, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += w.empty() ? std::to_string(c) : std::to_string(c) + "*" + word_to_string(w);
    }
    return out;
}

FreeWord NormalWord::word() const
{
    FreeWord w(static_cast<std::size_t>(i), kLetterV1);
    w.append(static_cast<std::size_t>(j), kLetterV2);
    if (m != 0) w.push_back(group_letter(m));
    return w;
}

std::string to_string(NormalWord const& w) { return word_to_string(w.word()); }

namespace {

void add_group_element(NCPolynomial& out, GroupAlgebraElement const& x, FreeWord const& prefix, Scalar s)
{
    for (int t = 0; t < x.p(); ++t)
        if (x[t] != 0) out.add_term(prefix + group_word(t, x.p()), fp::mul(x[t], s, x.p()));
}

}  // namespace

RuleSet rules_from_params(DeformationParams const& params)
{
    const Prime p = params.prime();
    const int n = p.value();
    RuleSet rules{p, {}, NCPolynomial(p)};
    for (int m = 0; m < n; ++m) {
        const FreeWord gm = group_word(m, n);
        NCPolynomial r1(p);
        r1.add_term(FreeWord(1, kLetterV1) + gm, 1);
        add_group_element(r1, params.lambda(m, 0), {}, 1);
        NCPolynomial r2(p);
        r2.add_term(FreeWord(1, kLetterV1) + gm, m);
        r2.add_term(FreeWord(1, kLetterV2) + gm, 1);
        add_group_element(r2, params.lambda(m, 1), {}, 1);
        rules.group_vector.push_back(std::move(r1));
        rules.group_vector.push_back(std::move(r2));
    }
    NCPolynomial& r3 = rules.commutator;
    r3.add_term(FreeWord{kLetterV1, kLetterV2}, 1);
    add_group_element(r3, params.kappa_c(), {}, n - 1);
    add_group_element(r3, params.kappa_l().row(0), FreeWord(1, kLetterV1), n - 1);
    add_group_element(r3, params.kappa_l().row(1), FreeWord(1, kLetterV2), n - 1);
    return rules;
}

namespace {

bool is_redex(Letter a, Letter b) { return is_group_letter(a) || (a == kLetterV2 && b == kLetterV1); }

}  // namespace

std::optional<std::size_t> find_redex(FreeWord const& w, Strategy strategy)
{
    if (w.size() < 2) return std::nullopt;
    if (strategy == Strategy::leftmost) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (is_redex(w[k], w[k + 1])) return k;
    } else {
        for (std::size_t k = w.size() - 1; k-- > 0;)
            if (is_redex(w[k], w[k + 1])) return k;
    }
    return std::nullopt;
}

bool is_irreducible(FreeWord const& w) { return !find_redex(w, Strategy::leftmost).has_value(); }

Reducer::Reducer(RuleSet const& rules, Strategy strategy, std::ostream* trace)
    : rules_(&rules), strategy_(strategy), trace_(trace), scratch_(rules.p)
{
}

NCPolynomial const& Reducer::reduce(FreeWord const& w)
{
    if (trace_ != nullptr) {
        scratch_ = compute(w);
        return scratch_;
    }
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    auto result = compute(w);
    return memo_.insert_or_assign(w, std::move(result)).first->second;
}

NCPolynomial Reducer::reduce(NCPolynomial const& x)
{
    NCPolynomial out(rules_->p);
    for (auto const& [w, c] : x.terms()) {
        NCPolynomial r = reduce(w);  // copy: the reference may be invalidated by later inserts
        out.add_scaled(r, c);
    }
    return out;
}

NCPolynomial Reducer::compute(FreeWord const& w)
{
    const Prime p = rules_->p;
    const auto pos = find_redex(w, strategy_);
    if (!pos) return NCPolynomial(p, w);

    const std::size_t k = *pos;
    const Letter a = w[k];
    const Letter b = w[k + 1];
    const FreeWord prefix = w.substr(0, k);
    const FreeWord suffix = w.substr(k + 2);

    NCPolynomial step(p);
    char const* rule = "";
    if (is_group_letter(a) && is_group_letter(b)) {
        step.add_term(prefix + group_word(group_exponent(a) + group_exponent(b), p.value()) + suffix, 1);
        rule = "R4";
    } else if (is_group_letter(a)) {
        step = rules_->rhs(group_exponent(a), b).wrapped(prefix, suffix);
        rule = b == kLetterV1 ? "R1" : "R2";
    } else {
        step = rules_->commutator.wrapped(prefix, suffix);
        rule = "R3";
    }
    if (trace_ != nullptr) *trace_ << word_to_string(w) << " -> " << to_string(step) << "  [" << rule << "]\n";

    NCPolynomial out(p);
    for (auto const& [word, c] : step.terms()) {
        NCPolynomial r = reduce(word);
        out.add_scaled(r, c);
    }
    return out;
}

NCPolynomial oracle_multiply(NormalWord const& x, NormalWord const& y, Reducer& reducer)
{
    return reducer.reduce(x.word() + y.word());
}

std::vector<NormalWord> normal_words(int p, int d)
{
    std::vector<NormalWord> out;
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i)
            for (int m = 0; m < p; ++m) out.push_back(NormalWord{i, t - i, m});
    return out;
}

namespace {

NCPolynomial times_word(NCPolynomial const& x, FreeWord const& w, bool on_right, Reducer& reducer)
{
    NCPolynomial out(x.prime());
    for (auto const& [word, c] : x.terms()) {
        NCPolynomial r = reducer.reduce(on_right ? word + w : w + word);
        out.add_scaled(r, c);
    }
    return out;
}

struct Triple {
    std::uint32_t x, y, z;
};

}  // namespace

AssociativityResult check_associativity(RuleSet const& rules, int degree_bound, unsigned workers)
{
    if (degree_bound < 3) throw Error("associativity sweep needs degree bound D >= 3");
    const auto words = normal_words(rules.p.value(), degree_bound);

    // Sweep order: total filtered degree, then total letter count, so the
    // first witness is a shortest overlap.
    std::vector<Triple> triples;
    for (std::uint32_t x = 0; x < words.size(); ++x)
        for (std::uint32_t y = 0; y < words.size(); ++y)
            for (std::uint32_t z = 0; z < words.size(); ++z)
                if (words[x].degree() + words[y].degree() + words[z].degree() <= degree_bound)
                    triples.push_back({x, y, z});
    auto key = [&](Triple const& t) {
        auto const& [x, y, z] = t;
        return std::pair{words[x].degree() + words[y].degree() + words[z].degree(),
                         words[x].word().size() + words[y].word().size() + words[z].word().size()};
    };
    std::stable_sort(triples.begin(), triples.end(), [&](Triple const& s, Triple const& t) { return key(s) < key(t); });

    const unsigned w = std::max(1U, workers);
    std::vector<std::optional<std::pair<std::uint64_t, AssociativityWitness>>> failures(w);
    std::vector<std::uint64_t> checked(w, 0);
    parallel_chunks(triples.size(), w, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        Reducer reducer(rules);
        for (std::uint64_t t = begin; t < end; ++t) {
            auto const& [xi, yi, zi] = triples[t];
            auto const& x = words[xi];
            auto const& y = words[yi];
            auto const& z = words[zi];
            NCPolynomial xy = reducer.reduce(x.word() + y.word());
            NCPolynomial yz = reducer.reduce(y.word() + z.word());
            auto left = times_word(xy, z.word(), true, reducer);
            auto right = times_word(yz, x.word(), false, reducer);
            ++checked[worker];
            if (!(left == right)) {
                failures[worker].emplace(t, AssociativityWitness{x, y, z, std::move(left), std::move(right)});
                return;
            }
        }
    });

    AssociativityResult result;
    for (auto c : checked) result.triples_checked += c;
    // Chunks are contiguous in sweep order, so the first failing chunk holds the first failure.
    for (auto& f : failures) {
        if (!f) continue;
        result.passed = false;
        result.witness = std::move(f->second);
        break;
    }
    return result;
}

DimensionResult check_dimension(RuleSet const& rules, int degree_bound)
{
    const int p = rules.p.value();
    DimensionResult result;
    result.counts.assign(static_cast<std::size_t>(degree_bound + 1), 0);
    for (int d = 0; d <= degree_bound; ++d)
        result.expected.push_back(static_cast<std::uint64_t>(p) *
                                  static_cast<std::uint64_t>((d + 2) * (d + 1) / 2));

    Reducer reducer(rules);
    const int alphabet = p + 1;  // v1, v2, g^1..g^(p-1)
    const int max_length = degree_bound + 1;
    for (int length = 0; length <= max_length; ++length) {
        std::vector<int> digits(static_cast<std::size_t>(length), 0);
        while (true) {
            FreeWord w;
            for (int c : digits) w.push_back(static_cast<Letter>(c));
            const int deg = filtered_degree(w);
            if (deg <= degree_bound && is_irreducible(w)) {
                for (int d = deg; d <= degree_bound; ++d) ++result.counts[static_cast<std::size_t>(d)];
                if (!(reducer.reduce(w) == NCPolynomial(rules.p, w))) result.idempotent = false;
            }
            int k = length - 1;
            while (k >= 0 && ++digits[static_cast<std::size_t>(k)] == alphabet) digits[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
    }
    result.passed = result.idempotent && result.counts == result.expected;
    return result;
}

}  // namespace orbifold
