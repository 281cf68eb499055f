#include "hdepth/couples.hpp"

#include "hdepth/errors.hpp"
#include "hdepth/kernels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

namespace hdepth {

FundamentalCouple CoupleTable::couple(std::size_t k) const
{
    auto l = lhs(k);
    auto r = rhs(k);
    return {{l.begin(), l.end()}, {r.begin(), r.end()}};
}

void CoupleTable::push(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs)
{
    lhs_.insert(lhs_.end(), lhs.begin(), lhs.end());
    rhs_.insert(rhs_.end(), rhs.begin(), rhs.end());
    offsets_.push_back(lhs_.size());
    max_length_ = std::max(max_length_, lhs.size());
}

void CoupleTable::append(const CoupleTable& other)
{
    const std::size_t base = lhs_.size();
    lhs_.insert(lhs_.end(), other.lhs_.begin(), other.lhs_.end());
    rhs_.insert(rhs_.end(), other.rhs_.begin(), other.rhs_.end());
    for (std::size_t k = 1; k < other.offsets_.size(); ++k)
        offsets_.push_back(base + other.offsets_[k]);
    max_length_ = std::max(max_length_, other.max_length_);
}

void CoupleTable::reserve(std::size_t couples, std::size_t entries)
{
    offsets_.reserve(couples + 1);
    lhs_.reserve(entries);
    rhs_.reserve(entries);
}

FundamentalCouple couple_from_chain(const SemigroupPair& s, std::span<const std::int64_t> chain)
{
    const std::int64_t alpha = s.alpha(), beta = s.beta(), ab = s.product();
    if (chain.empty())
        return {{0}, {ab}};
    std::vector<GapPresentation> pres;
    for (auto e : chain) {
        if (!s.is_gap(e))
            throw input_error("NotAGap", std::to_string(e) + " is not a gap");
        pres.push_back(s.present(e));
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (!(pres[k].a > pres[k + 1].a && pres[k].b < pres[k + 1].b))
            throw input_error("NotAChain", std::to_string(chain[k]) + " does not strictly precede " +
                                               std::to_string(chain[k + 1]));
    }
    FundamentalCouple c;
    c.lhs.push_back(0);
    c.lhs.insert(c.lhs.end(), chain.begin(), chain.end());
    c.rhs.push_back((beta - pres.front().a) * alpha);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        c.rhs.push_back(ab - pres[k + 1].a * alpha - pres[k].b * beta);
    c.rhs.push_back((alpha - pres.back().b) * beta);
    return c;
}

std::vector<FundamentalCouple> enumerate_couples(const SemigroupPair& s)
{
    auto table = couple_table(s);
    std::vector<FundamentalCouple> out;
    out.reserve(table->size());
    for (std::size_t k = 0; k < table->size(); ++k)
        out.push_back(table->couple(k));
    return out;
}

std::shared_ptr<const CoupleTable> couple_table(const SemigroupPair& s)
{
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const CoupleTable>> cache;
    const auto key = std::make_pair(s.alpha(), s.beta());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<const CoupleTable>(kernels::parallel::enumerate(kernels::build_gap_poset(s)));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(table)).first->second;
}

namespace {

struct StreamingWalk {
    const kernels::GapPoset& poset;
    const std::function<bool(const FundamentalCouple&)>& visit;
    std::vector<std::int64_t> chain;
    SemigroupPair pair;

    bool descend(std::uint32_t e)
    {
        chain.push_back(poset.gaps[e]);
        bool go_on = visit(couple_from_chain(pair, chain));
        for (auto f : poset.successors[e]) {
            if (!go_on)
                break;
            go_on = descend(f);
        }
        chain.pop_back();
        return go_on;
    }
};

} // namespace

void for_each_couple(const SemigroupPair& s, const std::function<bool(const FundamentalCouple&)>& visit)
{
    if (!visit(FundamentalCouple{{0}, {s.product()}}))
        return;
    const auto poset = kernels::build_gap_poset(s);
    StreamingWalk walk{poset, visit, {}, s};
    for (std::uint32_t e = 0; e < poset.gaps.size(); ++e)
        if (!walk.descend(e))
            return;
}

Integer count_couples(const SemigroupPair& s)
{
    return kernels::serial::count_chains(kernels::build_gap_poset(s));
}

bool is_fundamental(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs)
{
    const std::int64_t alpha = s.alpha(), beta = s.beta(), ab = s.product();
    if (lhs.empty() || lhs.size() != rhs.size())
        return false;
    const std::size_t m = lhs.size() - 1;
    // I starts at 0.
    if (lhs[0] != 0)
        return false;
    // Gap entries, and both ends of J within alpha*beta.
    for (std::size_t k = 1; k <= m; ++k)
        if (!s.is_gap(lhs[k]))
            return false;
    for (std::size_t k = 1; k < m; ++k)
        if (!s.is_gap(rhs[k]))
            return false;
    if (rhs[0] > ab || rhs[m] > ab)
        return false;
    // Congruence and ordering pattern.
    for (std::size_t k = 0; k <= m; ++k)
        if (floor_mod(lhs[k] - rhs[k], alpha) != 0 || !(lhs[k] < rhs[k]))
            return false;
    for (std::size_t k = 0; k < m; ++k)
        if (floor_mod(rhs[k] - lhs[k + 1], beta) != 0 || !(rhs[k] > lhs[k + 1]))
            return false;
    if (floor_mod(rhs[m] - lhs[0], beta) != 0 || !(rhs[m] >= lhs[0]))
        return false;
    // Pairwise differences in I are gaps.
    for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t l = k + 1; l <= m; ++l)
            if (!s.is_gap(std::abs(lhs[k] - lhs[l])))
                return false;
    return true;
}

namespace {

bool balanced_conditions(const SemigroupPair& s, std::span<const std::int64_t> lhs,
                         std::span<const std::int64_t> rhs, bool strict)
{
    const std::int64_t alpha = s.alpha(), beta = s.beta();
    if (lhs.empty() || lhs.size() != rhs.size())
        return false;
    const std::size_t m = lhs.size() - 1;
    auto below = [strict](std::int64_t x, std::int64_t y) { return strict ? x < y : x <= y; };
    for (std::size_t k = 0; k <= m; ++k)
        if (floor_mod(lhs[k] - rhs[k], alpha) != 0 || !below(lhs[k], rhs[k]))
            return false;
    for (std::size_t k = 0; k < m; ++k)
        if (floor_mod(rhs[k] - lhs[k + 1], beta) != 0 || !below(lhs[k + 1], rhs[k]))
            return false;
    return floor_mod(rhs[m] - lhs[0], beta) == 0 && below(lhs[0], rhs[m]);
}

} // namespace

bool is_balanced(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs)
{
    return balanced_conditions(s, lhs, rhs, false);
}

bool is_reduced(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs)
{
    if (!balanced_conditions(s, lhs, rhs, true))
        return false;
    const std::int64_t ab = s.product();
    const std::size_t m = lhs.size() - 1;
    auto bound = [ab](std::int64_t x, std::int64_t y) { return std::min(x, y) < ab; };
    for (std::size_t k = 1; k <= m; ++k)
        if (!bound(rhs[k - 1] - lhs[k], rhs[k] - lhs[k]))
            return false;
    if (!bound(rhs[m] - lhs[0], rhs[0] - lhs[0]))
        return false;
    for (std::size_t k = 0; k < m; ++k)
        if (!bound(rhs[k] - lhs[k], rhs[k] - lhs[k + 1]))
            return false;
    return bound(rhs[m] - lhs[m], rhs[m] - lhs[0]);
}

namespace {

/// Inverse of x modulo m (m >= 1, gcd(x, m) = 1).
std::int64_t inverse_mod(std::int64_t x, std::int64_t m)
{
    if (m == 1)
        return 0;
    std::int64_t r0 = m, r1 = floor_mod(x, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return floor_mod(t0, m);
}

/// Smallest x >= floor with x = u (mod alpha) and x = v (mod beta).
std::int64_t smallest_solution(const SemigroupPair& s, std::int64_t u, std::int64_t v, std::int64_t floor)
{
    const std::int64_t alpha = s.alpha(), beta = s.beta(), ab = s.product();
    const std::int64_t t = floor_mod((v - u) % beta * inverse_mod(alpha, beta), beta);
    const std::int64_t x = floor_mod(u + alpha * t, ab);
    return x + ab * (floor_div(floor - x + ab - 1, ab));
}

} // namespace

std::vector<std::int64_t> minimal_connectors(const SemigroupPair& s, std::span<const std::int64_t> lhs)
{
    std::vector<std::int64_t> out;
    out.reserve(lhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        const std::int64_t u = lhs[k];
        const std::int64_t v = lhs[(k + 1) % lhs.size()];
        out.push_back(smallest_solution(s, u, v, std::max(u, v)));
    }
    return out;
}

BalancedCouple shift_couple(const BalancedCouple& c, std::int64_t x)
{
    BalancedCouple out = c;
    for (auto& i : out.lhs)
        i -= x;
    for (auto& j : out.rhs)
        j -= x;
    return out;
}

BalancedCouple random_balanced(const SemigroupPair& s, std::uint64_t seed, std::size_t max_length,
                               std::int64_t slack_bound)
{
    const std::int64_t ab = s.product();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(1, std::max<std::size_t>(1, max_length));
    std::uniform_int_distribution<std::int64_t> idx_dist(-ab, 2 * ab);
    std::uniform_int_distribution<std::int64_t> slack_dist(0, std::max<std::int64_t>(0, slack_bound));
    BalancedCouple c;
    c.lhs.resize(len_dist(rng));
    for (auto& i : c.lhs)
        i = idx_dist(rng);
    c.rhs = minimal_connectors(s, c.lhs);
    for (auto& j : c.rhs)
        j += ab * slack_dist(rng);
    return c;
}

} // namespace hdepth
