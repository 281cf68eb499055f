#pragma once

// Fixtures shared by the test binaries plus a few reference routines that
// deliberately avoid the library's own expansion code.

#include "hdepth/series.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

using hdepth::DenomSet;
using hdepth::Integer;
using hdepth::LaurentPoly;
using hdepth::RationalSeries;
using hdepth::SemigroupPair;
using hdepth::TermList;

inline SemigroupPair pair(std::int64_t a, std::int64_t b)
{
    return SemigroupPair::from_weights(a, b);
}

/// 1/((1-t^3)(1-t^5)) + t + t^2 as a term list.
inline TermList free_plus_two_points_terms()
{
    return {{0, 1, DenomSet::both()}, {1, 1, DenomSet::none()}, {2, 1, DenomSet::none()}};
}

inline RationalSeries free_plus_two_points()
{
    return hdepth::to_rational(pair(3, 5), free_plus_two_points_terms());
}

/// 1 + t + t^3 + sum_{n>=6} t^n over (3,5), written as t + R/(Y) summands.
inline TermList sparse_head_terms()
{
    return {{1, 1, DenomSet::none()},
            {0, 1, DenomSet::only_alpha()},
            {7, 1, DenomSet::only_alpha()},
            {8, 1, DenomSet::only_alpha()}};
}

inline RationalSeries sparse_head()
{
    return hdepth::to_rational(pair(3, 5), sparse_head_terms());
}

/// (1 + t + t^6 + t^7 + t^8)/(1 - t^3) over (3,4).
inline RationalSeries five_cyclic_atoms()
{
    return RationalSeries(pair(3, 4), LaurentPoly{{0, 1}, {1, 1}, {6, 1}, {7, 1}, {8, 1}}, true, false);
}

inline RationalSeries free_rank_one(std::int64_t a, std::int64_t b)
{
    return RationalSeries(pair(a, b), LaurentPoly::monomial(0), true, true);
}

/// Coefficients h_from..h_to by the recurrence
/// h_n = q_n + h_{n-a} + h_{n-b} - h_{n-a-b} (with only the declared factors).
inline std::vector<Integer> recurrence_coeffs(const RationalSeries& h, std::int64_t from, std::int64_t to)
{
    const std::int64_t a = h.alpha(), b = h.beta();
    const std::int64_t start = h.is_zero() ? from : std::min(from, h.low());
    std::vector<Integer> v(static_cast<std::size_t>(to - start + 1));
    auto at = [&](std::int64_t n) -> Integer { return n < start ? Integer(0) : v[static_cast<std::size_t>(n - start)]; };
    for (std::int64_t n = start; n <= to; ++n) {
        Integer x = h.numerator().coeff(n);
        if (h.den_alpha())
            x += at(n - a);
        if (h.den_beta())
            x += at(n - b);
        if (h.den_alpha() && h.den_beta())
            x -= at(n - a - b);
        v[static_cast<std::size_t>(n - start)] = x;
    }
    return {v.begin() + (from - start), v.end()};
}

inline bool brute_member(std::int64_t a, std::int64_t b, std::int64_t n)
{
    for (std::int64_t x = 0; x * a <= n; ++x)
        for (std::int64_t y = 0; x * a + y * b <= n; ++y)
            if (x * a + y * b == n)
                return true;
    return false;
}

} // namespace testing_support
