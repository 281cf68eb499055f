#pragma once

#include "hdepth/couples.hpp"
#include "hdepth/series.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hdepth {

/// A failing instance sum_I h_{n+i} = lhs > rhs = sum_J h_{n+j}.
struct Violation {
    FundamentalCouple couple;
    std::int64_t n = 0;
    Integer lhs;
    Integer rhs;
};

struct StarVerdict {
    bool holds = true;
    std::optional<Violation> violation;
};

/// Verdict for weights with gcd delta: one entry per residue k in [0, delta),
/// each computed on the k-th Veronese slice.
struct SlicedStarVerdict {
    bool holds = true;
    std::int64_t delta = 1;
    std::vector<StarVerdict> slices;
};

struct CriticalHit {
    FundamentalCouple couple;
    std::int64_t m = 0;
    Generator side = Generator::alpha;
    bool strict = false;
};

/// Decides the couple inequalities for every n and every fundamental couple
/// of the (coprime) weights. The first violation in (couple, n) order is
/// reported. Throws NotNonnegative.
StarVerdict check_star(const RationalSeries& h);

/// Same decision for arbitrary positive weights via Veronese slices.
SlicedStarVerdict check_star_general(const RationalSeries& h);

/// All tight inequalities that are critical for the given side, over
/// m in [-alpha*beta, 0). Throws NotNonnegative.
std::vector<CriticalHit> find_nonstrict_critical(const RationalSeries& h, Generator side);

/// True when find_nonstrict_critical would be nonempty; stops at the first hit.
bool has_nonstrict_critical(const RationalSeries& h, Generator side);

/// sum_I h_i <= sum_J h_j for the given couple (no shift).
bool check_balanced_inequality(const RationalSeries& h, const BalancedCouple& c);

/// Smallest n where sum_I h_{n+i} > sum_J h_{n+j}, for index sequences of
/// equal length; none if the family holds for all n.
std::optional<std::int64_t> first_violation_shift(const RationalSeries& h, std::span<const std::int64_t> lhs,
                                                  std::span<const std::int64_t> rhs);

/// h_n + ... + h_{n+alpha-1} <= h_{n+beta} + ... + h_{n+beta+alpha-1} for all n.
/// Throws NotNonnegative.
bool check_inequality_24(const RationalSeries& h);

/// Smallest n where the window-sum inequality above fails.
std::optional<std::int64_t> inequality_24_failure(const RationalSeries& h);

} // namespace hdepth
