#include "hdepth/semigroup.hpp"

#include "hdepth/errors.hpp"

#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace hdepth {

namespace {

// Inverse of x modulo m (m >= 1, gcd(x, m) = 1).
std::int64_t inverse_mod(std::int64_t x, std::int64_t m)
{
    if (m == 1)
        return 0;
    std::int64_t r0 = m, r1 = floor_mod(x, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    return floor_mod(s0, m);
}

constexpr std::int64_t kMaxProduct = std::int64_t{1} << 31;

} // namespace

SemigroupPair SemigroupPair::from_weights(std::int64_t d1, std::int64_t d2)
{
    if (d1 < 1 || d2 < 1)
        throw InputError("NonPositive", "weights must be positive");
    if (d1 == d2 && d1 > 1)
        throw EqualWeights(d1);
    const std::int64_t g = std::gcd(d1, d2);
    if (g > 1)
        throw NonCoprime(g);
    const std::int64_t alpha = std::min(d1, d2);
    const std::int64_t beta = std::max(d1, d2);
    if (beta > kMaxProduct / alpha)
        throw InputError("TooLarge", "alpha*beta exceeds 2^31");
    return SemigroupPair(alpha, beta, inverse_mod(beta, alpha));
}

bool SemigroupPair::is_member(std::int64_t n) const noexcept
{
    if (n < 0)
        return false;
    // n is a member iff it dominates the Apery element s*beta of its class mod alpha.
    const std::int64_t s = floor_mod(n % alpha_ * beta_inv_mod_alpha_, alpha_);
    return n >= s * beta_;
}

std::vector<std::int64_t> SemigroupPair::gaps() const
{
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(genus()));
    for (std::int64_t n = 1; n < conductor(); ++n)
        if (!is_member(n))
            out.push_back(n);
    return out;
}

GapPresentation SemigroupPair::present(std::int64_t n) const
{
    if (n <= 0)
        throw InputError("NonPositive", "presentation requires n >= 1, got " + std::to_string(n));
    // n = -b*beta (mod alpha) pins b; then (n + b*beta)/alpha = p*beta - a pins a and p.
    const std::int64_t b = floor_mod(-(n % alpha_) * beta_inv_mod_alpha_, alpha_);
    const std::int64_t q = (n + b * beta_) / alpha_;
    const std::int64_t a = floor_mod(-q, beta_);
    const std::int64_t p = (q + a) / beta_;
    return {p, a, b};
}

std::vector<std::int64_t> SemigroupPair::apery(std::int64_t g) const
{
    std::int64_t step = 0;
    if (g == alpha_)
        step = beta_;
    else if (g == beta_)
        step = alpha_;
    else
        throw InputError("BadModulus", "Apery set requires g in {alpha, beta}");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(g));
    for (std::int64_t s = 0; s < g; ++s)
        out.push_back(s * step);
    return out;
}

namespace {

GapPresentation checked_gap(const SemigroupPair& s, std::int64_t e)
{
    if (!s.is_gap(e))
        throw InputError("NotAGap", std::to_string(e) + " is not a gap");
    return s.present(e);
}

} // namespace

GapOrder gap_order(const SemigroupPair& s, std::int64_t e1, std::int64_t e2)
{
    const auto p1 = checked_gap(s, e1);
    const auto p2 = checked_gap(s, e2);
    if (e1 == e2)
        return GapOrder::equal;
    if (p1.a > p2.a && p1.b < p2.b)
        return GapOrder::strict;
    if (p1.a >= p2.a && p1.b <= p2.b)
        return GapOrder::weak_only;
    return GapOrder::incomparable;
}

std::optional<std::int64_t> connecting_gap(const SemigroupPair& s, std::int64_t e1, std::int64_t e2)
{
    const auto p1 = checked_gap(s, e1);
    const auto p2 = checked_gap(s, e2);
    if (!(p1.a >= p2.a && p1.b <= p2.b))
        return std::nullopt;
    return s.product() - p2.a * s.alpha() - p1.b * s.beta();
}

bool diff_is_gap(const SemigroupPair& s, std::int64_t e1, std::int64_t e2)
{
    const auto p1 = checked_gap(s, e1);
    const auto p2 = checked_gap(s, e2);
    return (p2.a - p1.a) * (p2.b - p1.b) < 0;
}

} // namespace hdepth
