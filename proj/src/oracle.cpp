#include "hdepth/oracle.hpp"

#include "hdepth/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hdepth::oracle {

namespace {

bool brute_member(std::int64_t a, std::int64_t b, std::int64_t n)
{
    if (n < 0)
        return false;
    for (std::int64_t x = 0; x * a <= n; ++x)
        if ((n - x * a) % b == 0)
            return true;
    return false;
}

/// Number of (x, y) >= 0 with x*a + y*b = n, by enumeration.
std::int64_t representations(std::int64_t a, std::int64_t b, bool use_a, bool use_b, std::int64_t n)
{
    if (n < 0)
        return 0;
    if (!use_a && !use_b)
        return n == 0 ? 1 : 0;
    if (!use_b)
        return n % a == 0 ? 1 : 0;
    if (!use_a)
        return n % b == 0 ? 1 : 0;
    std::int64_t count = 0;
    for (std::int64_t x = 0; x * a <= n; ++x)
        if ((n - x * a) % b == 0)
            ++count;
    return count;
}

using Poly = std::map<std::int64_t, std::int64_t>;

void add_to(Poly& p, std::int64_t e, std::int64_t c)
{
    if ((p[e] += c) == 0)
        p.erase(e);
}

/// Remainder series kept as a numerator over (1 - t^a)(1 - t^b).
struct Remainder {
    std::int64_t a;
    std::int64_t b;
    Poly num;

    std::int64_t coefficient(std::int64_t n) const
    {
        std::int64_t sum = 0;
        for (const auto& [e, c] : num)
            sum += c * representations(a, b, true, true, n - e);
        return sum;
    }

    /// Lowest index with a nonzero coefficient; the series has dimension
    /// <= 1 so its coefficients are ab-periodic past deg(num) - a - b.
    std::int64_t lowest_support() const
    {
        for (std::int64_t n = num.begin()->first;; ++n)
            if (coefficient(n) != 0)
                return n;
    }

    bool nonnegative() const
    {
        if (num.empty())
            return true;
        const std::int64_t top = num.rbegin()->first + a * b;
        for (std::int64_t n = num.begin()->first; n <= top; ++n)
            if (coefficient(n) < 0)
                return false;
        return true;
    }

    std::int64_t stable_mass() const
    {
        if (num.empty())
            return 0;
        const std::int64_t from = num.rbegin()->first + a * b;
        std::int64_t sum = 0;
        for (std::int64_t n = from; n < from + a * b; ++n)
            sum += coefficient(n);
        return sum;
    }

    /// Subtract t^s / (1 - t^g) written over the full denominator.
    void subtract(std::int64_t s, bool alpha_atom, std::int64_t copies)
    {
        const std::int64_t other = alpha_atom ? b : a;
        add_to(num, s, -copies);
        add_to(num, s + other, copies);
    }
};

struct Search {
    std::int64_t depth_limit;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::set<Poly> dead;

    bool run(const Remainder& r, std::int64_t depth)
    {
        if (r.num.empty())
            return true;
        if (depth >= depth_limit || ++nodes > node_limit) {
            exhausted = true;
            return false;
        }
        if (dead.count(r.num))
            return false;
        const std::int64_t s = r.lowest_support();
        const std::int64_t c = r.coefficient(s);
        for (std::int64_t k = c; k >= 0; --k) {
            Remainder next = r;
            if (k > 0)
                next.subtract(s, true, k);
            if (c - k > 0)
                next.subtract(s, false, c - k);
            if (!next.nonnegative())
                continue;
            if (run(next, depth + 1))
                return true;
        }
        if (!exhausted)
            dead.insert(r.num);
        return false;
    }
};

} // namespace

GapPresentation brute_present(const SemigroupPair& s, std::int64_t n)
{
    if (n <= 0)
        throw input_error("NonPositive", "presentation needs n >= 1");
    const std::int64_t alpha = s.alpha(), beta = s.beta(), ab = alpha * beta;
    std::vector<GapPresentation> hits;
    for (std::int64_t p = 1; p <= n / ab + 2; ++p)
        for (std::int64_t a = 0; a < beta; ++a)
            for (std::int64_t b = 0; b < alpha; ++b)
                if (p * ab - a * alpha - b * beta == n)
                    hits.push_back({p, a, b});
    if (hits.size() != 1)
        throw InvariantBroken("expected exactly one presentation of " + std::to_string(n) + ", found " +
                              std::to_string(hits.size()));
    return hits.front();
}

std::uint64_t brute_count_couples(const SemigroupPair& s)
{
    const std::int64_t alpha = s.alpha(), beta = s.beta();
    if (alpha * beta > 200)
        throw input_error("TooLarge", "brute-force couple count limited to alpha*beta <= 200");
    auto is_gap = [&](std::int64_t n) { return n > 0 && !brute_member(alpha, beta, n); };
    std::vector<std::int64_t> gaps;
    for (std::int64_t n = 1; n < alpha * beta; ++n)
        if (is_gap(n))
            gaps.push_back(n);
    // Count every subset whose members pairwise differ by a gap.
    std::vector<std::int64_t> chosen;
    std::uint64_t count = 0;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        ++count;
        for (std::size_t k = from; k < gaps.size(); ++k) {
            bool ok = true;
            for (auto x : chosen)
                ok = ok && is_gap(std::abs(gaps[k] - x));
            if (!ok)
                continue;
            chosen.push_back(gaps[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return count;
}

const char* to_string(SearchResult r)
{
    switch (r) {
    case SearchResult::decomposable:
        return "decomposable";
    case SearchResult::not_decomposable:
        return "not_decomposable";
    case SearchResult::budget_exceeded:
        return "budget_exceeded";
    }
    return "unknown";
}

SearchResult brute_decomposable_dim1(const RationalSeries& h, SearchBudget budget)
{
    const auto s = h.pair();
    Remainder r{s.alpha(), s.beta(), {}};
    for (const auto& [e, c] : h.numerator().terms()) {
        // Lift to the full denominator by hand.
        Poly term{{e, static_cast<std::int64_t>(c)}};
        for (auto [present, g] : {std::pair{h.den_alpha(), s.alpha()}, std::pair{h.den_beta(), s.beta()}}) {
            if (present)
                continue;
            Poly lifted;
            for (const auto& [x, y] : term) {
                add_to(lifted, x, y);
                add_to(lifted, x + g, -y);
            }
            term = std::move(lifted);
        }
        for (const auto& [x, y] : term)
            add_to(r.num, x, y);
    }
    std::int64_t at_one = 0;
    for (const auto& [e, c] : r.num)
        at_one += c;
    if (at_one != 0)
        throw input_error("DimensionTooHigh", "brute-force search needs dimension <= 1");
    if (!r.nonnegative())
        throw input_error("NotNonnegative", "series has a negative coefficient");
    Search search{budget.depth > 0 ? budget.depth : r.stable_mass() + 1, budget.nodes, 0, false, {}};
    if (search.run(r, 0))
        return SearchResult::decomposable;
    return search.exhausted ? SearchResult::budget_exceeded : SearchResult::not_decomposable;
}

RationalSeries random_star_series(const SemigroupPair& s, std::uint64_t seed, int n_atoms,
                                  std::int64_t shift_bound)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::int64_t> shift(-shift_bound, shift_bound);
    std::uniform_int_distribution<int> coeff(1, 3);
    TermList terms;
    for (int k = 0; k < std::max(n_atoms, 1); ++k) {
        static constexpr DenomSet kinds[] = {DenomSet::only_alpha(), DenomSet::only_beta(), DenomSet::both()};
        const DenomSet d = kinds[kind(rng)];
        const std::int64_t sh = shift(rng);
        terms.push_back({sh, coeff(rng), d});
    }
    return to_rational(s, terms);
}

Corpus make_corpus(const SemigroupPair& s, std::uint64_t seed, std::size_t count, int max_atoms,
                   std::int64_t shift_bound)
{
    Corpus corpus{seed, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> atoms(1, std::max(max_atoms, 1));
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::int64_t> shift(-shift_bound, shift_bound);
    std::uniform_int_distribution<int> coeff(1, 3);
    static constexpr DenomSet kinds[] = {DenomSet::only_alpha(), DenomSet::only_beta(), DenomSet::both()};
    for (std::size_t i = 0; i < count; ++i) {
        TermList recipe;
        const int n = atoms(rng);
        for (int k = 0; k < n; ++k) {
            const DenomSet d = kinds[kind(rng)];
            const std::int64_t sh = shift(rng);
            recipe.push_back({sh, coeff(rng), d});
        }
        auto series = to_rational(s, recipe);
        corpus.members.push_back({std::move(recipe), std::move(series)});
    }
    return corpus;
}

std::vector<FixedInequality> regression_vectors_3_5()
{
    return {
        {6, {0}, {15}},
        {7, {0, 1}, {6, 10}},
        {8, {0, 2}, {12, 5}},
        {9, {0, 4}, {9, 10}},
        {10, {0, 7}, {12, 10}},
        {11, {0, 1, 2}, {5, 6, 7}},
        {12, {0, 2, 4}, {5, 7, 9}},
    };
}

} // namespace hdepth::oracle
