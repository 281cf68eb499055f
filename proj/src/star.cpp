#include "hdepth/star.hpp"

#include "hdepth/errors.hpp"
#include "hdepth/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hdepth {

namespace {

/// Runs f on the coefficients h_lo..h_hi, as machine integers when every
/// sum of up to `terms` of them fits, else as Integer.
template <class F>
auto with_window(const RationalSeries& h, std::int64_t lo, std::int64_t hi, std::size_t terms, F&& f)
{
    auto values = coeffs(h, lo, hi);
    Integer peak = 0;
    for (const auto& v : values)
        peak = std::max(peak, Integer(abs(v)));
    const Integer limit = Integer(1) << 62;
    if (peak * Integer(std::max<std::size_t>(terms, 1)) < limit) {
        kernels::CoefficientWindow<std::int64_t> w{lo, {}};
        w.values.reserve(values.size());
        for (const auto& v : values)
            w.values.push_back(static_cast<std::int64_t>(v));
        return f(w);
    }
    kernels::CoefficientWindow<Integer> w{lo, std::move(values)};
    return f(w);
}

template <class T>
Integer window_sum(const kernels::CoefficientWindow<T>& w, std::span<const std::int64_t> idx, std::int64_t n)
{
    Integer s = 0;
    for (auto i : idx)
        s += Integer(w.at(n + i));
    return s;
}

void require_nonnegative(const RationalSeries& h)
{
    if (!is_nonnegative(h))
        throw NotNonnegative();
}

std::int64_t step_of(const SemigroupPair& s, Generator g)
{
    return g == Generator::alpha ? s.alpha() : s.beta();
}

std::vector<CriticalHit> critical_scan(const RationalSeries& h, Generator side, bool stop_at_first)
{
    const auto s = h.pair();
    require_nonnegative(h);
    if (h.is_zero())
        return {};
    const std::int64_t ab = s.product();
    const auto table = couple_table(s);
    const std::int64_t g = step_of(s, side);
    // Critical needs m + i < 0 <= m + j with i >= 0 and j <= alpha*beta.
    const kernels::ShiftRange shifts{-ab, -1};
    auto hits = with_window(h, -ab, ab, table->max_length(), [&](const auto& w) {
        return kernels::parallel::nonstrict_critical(*table, w, g, shifts, stop_at_first);
    });
    std::vector<CriticalHit> out;
    out.reserve(hits.size());
    for (const auto& hit : hits)
        out.push_back({table->couple(hit.couple), hit.n, side, false});
    return out;
}

} // namespace

StarVerdict check_star(const RationalSeries& h)
{
    const auto s = h.pair();
    require_nonnegative(h);
    if (h.is_zero())
        return {};
    const std::int64_t ab = s.product();
    const auto table = couple_table(s);
    // Below L0 - ab every index is under the support. For n >= D every index
    // lies where h_{k+ab} - h_k is constant (num(1) with both factors, 0
    // otherwise); |I| = |J| makes each inequality's slack ab-periodic there,
    // so one period past D decides all larger n.
    const kernels::ShiftRange shifts{h.low() - ab, stabilization_index(h)};
    return with_window(h, shifts.lo, shifts.hi + ab, table->max_length(), [&](const auto& w) {
        StarVerdict verdict;
        if (auto hit = kernels::parallel::star_scan(*table, w, shifts)) {
            Violation v;
            v.couple = table->couple(hit->couple);
            v.n = hit->n;
            v.lhs = window_sum(w, table->lhs(hit->couple), hit->n);
            v.rhs = window_sum(w, table->rhs(hit->couple), hit->n);
            verdict.holds = false;
            verdict.violation = std::move(v);
        }
        return verdict;
    });
}

SlicedStarVerdict check_star_general(const RationalSeries& h)
{
    require_nonnegative(h);
    SlicedStarVerdict out;
    out.delta = std::gcd(h.alpha(), h.beta());
    for (std::int64_t k = 0; k < out.delta; ++k) {
        const auto slice = out.delta == 1 ? h : veronese(h, out.delta, k);
        out.slices.push_back(slice.is_zero() ? StarVerdict{} : check_star(slice));
        out.holds = out.holds && out.slices.back().holds;
    }
    return out;
}

std::vector<CriticalHit> find_nonstrict_critical(const RationalSeries& h, Generator side)
{
    return critical_scan(h, side, false);
}

bool has_nonstrict_critical(const RationalSeries& h, Generator side)
{
    return !critical_scan(h, side, true).empty();
}

bool check_balanced_inequality(const RationalSeries& h, const BalancedCouple& c)
{
    if (c.lhs.empty() && c.rhs.empty())
        return true;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto* seq : {&c.lhs, &c.rhs})
        for (auto x : *seq) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    const auto values = coeffs(h, lo, hi);
    Integer left = 0, right = 0;
    for (auto i : c.lhs)
        left += values[static_cast<std::size_t>(i - lo)];
    for (auto j : c.rhs)
        right += values[static_cast<std::size_t>(j - lo)];
    return left <= right;
}

std::optional<std::int64_t> first_violation_shift(const RationalSeries& h, std::span<const std::int64_t> lhs,
                                                  std::span<const std::int64_t> rhs)
{
    if (lhs.size() != rhs.size() || lhs.empty())
        throw input_error("BadArgument", "index sequences must be nonempty and of equal length");
    if (h.is_zero())
        return std::nullopt;
    const std::int64_t ab = h.alpha() * h.beta();
    std::int64_t lo = lhs.front(), hi = lhs.front();
    for (auto seq : {lhs, rhs})
        for (auto x : seq) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    // Same periodicity argument as check_star, with the extremes of the
    // index sequences in place of 0 and alpha*beta.
    const std::int64_t first = h.low() - hi;
    const std::int64_t last = std::max<std::int64_t>(0, h.high()) - lo + ab;
    const auto values = coeffs(h, first + lo, last + hi);
    auto at = [&](std::int64_t k) -> const Integer& { return values[static_cast<std::size_t>(k - first - lo)]; };
    for (std::int64_t n = first; n <= last; ++n) {
        Integer slack = 0;
        for (auto j : rhs)
            slack += at(n + j);
        for (auto i : lhs)
            slack -= at(n + i);
        if (slack < 0)
            return n;
    }
    return std::nullopt;
}

std::optional<std::int64_t> inequality_24_failure(const RationalSeries& h)
{
    const auto s = h.pair();
    require_nonnegative(h);
    // The window sums are the coefficients g_n of G = (sum_{i<alpha} t^i) H,
    // and g_{n+beta} - g_n is the coefficient of t^{n+beta} in (1 - t^beta) G.
    const LaurentPoly num = (h.numerator() * LaurentPoly::geometric_block(1, s.alpha())).times_one_minus(s.beta());
    const RationalSeries k(s, num, h.den_alpha(), h.den_beta());
    if (k.is_zero() || is_nonnegative(k))
        return std::nullopt;
    const std::int64_t from = k.low();
    const auto values = coeffs(k, from, std::max(k.high(), from) + s.product());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0)
            return from + static_cast<std::int64_t>(i) - s.beta() - (s.alpha() - 1);
    throw InvariantBroken("negative coefficient of the window-sum series not found in its window");
}

bool check_inequality_24(const RationalSeries& h)
{
    return !inequality_24_failure(h).has_value();
}

} // namespace hdepth
