#include "helpers.hpp"

#include "hdepth/kernels.hpp"
#include "hdepth/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace hdepth;
using namespace hdepth::kernels;
using testing_support::pair;

namespace {

template <class T>
CoefficientWindow<T> window_of(const RationalSeries& h, std::int64_t lo, std::int64_t hi)
{
    CoefficientWindow<T> w;
    w.base = lo;
    for (const auto& c : coeffs(h, lo, hi))
        w.values.push_back(static_cast<T>(c));
    return w;
}

/// Nonnegative series, some violating the couple inequalities.
RationalSeries random_mixed(std::mt19937_64& rng, const SemigroupPair& s)
{
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng))
        return oracle::random_star_series(s, rng(), 4, 12);
    std::uniform_int_distribution<std::int64_t> sh(0, 10);
    std::uniform_int_distribution<int> c(1, 2);
    TermList terms{{0, 1, DenomSet::only_alpha()}};
    for (int k = 0; k < 3; ++k)
        terms.push_back({sh(rng), c(rng), DenomSet::none()});
    return to_rational(s, terms);
}

} // namespace

TEST_CASE("gap poset successors follow the strict order")
{
    const auto s = pair(5, 7);
    const auto p = build_gap_poset(s);
    REQUIRE(p.gaps == s.gaps());
    for (std::size_t e = 0; e < p.gaps.size(); ++e)
        for (std::size_t f = 0; f < p.gaps.size(); ++f) {
            const bool listed = std::find(p.successors[e].begin(), p.successors[e].end(), f) != p.successors[e].end();
            REQUIRE(listed == (gap_order(s, p.gaps[e], p.gaps[f]) == GapOrder::strict));
        }
}

TEST_CASE("serial and parallel enumeration agree")
{
    for (auto [a, b] : {std::pair{3, 5}, {4, 7}, {6, 11}, {7, 9}, {11, 13}}) {
        const auto poset = build_gap_poset(pair(a, b));
        const auto x = serial::enumerate(poset);
        const auto y = parallel::enumerate(poset);
        REQUIRE(x.size() == y.size());
        REQUIRE(Integer(x.size()) == serial::count_chains(poset));
        for (std::size_t k = 0; k < x.size(); ++k)
            REQUIRE(x.couple(k) == y.couple(k));
    }
}

TEST_CASE("critical pattern")
{
    const std::vector<std::int64_t> lhs{0, 5}, rhs{9, 8};
    CHECK(is_critical(lhs, rhs, -4, 4));
    CHECK_FALSE(is_critical(lhs, rhs, -4, 3));
    CHECK_FALSE(is_critical(lhs, rhs, 0, 4));
}

TEST_CASE("serial and parallel scans agree")
{
    std::mt19937_64 rng(314);
    for (auto [a, b] : {std::pair{3, 5}, {4, 7}, {5, 8}}) {
        const auto s = pair(a, b);
        const auto table = couple_table(s);
        const std::int64_t ab = s.product();
        for (int trial = 0; trial < 40; ++trial) {
            const auto h = random_mixed(rng, s);
            const ShiftRange range{h.low() - ab, std::max<std::int64_t>(h.high(), 0) + ab};
            const auto w64 = window_of<std::int64_t>(h, range.lo - ab, range.hi + 2 * ab);
            const auto wbig = window_of<Integer>(h, range.lo - ab, range.hi + 2 * ab);
            const auto v1 = serial::star_scan(*table, w64, range);
            REQUIRE(v1 == parallel::star_scan(*table, w64, range));
            REQUIRE(v1 == serial::star_scan(*table, wbig, range));
            REQUIRE(v1 == parallel::star_scan(*table, wbig, range));

            const auto wc = window_of<std::int64_t>(h, -2 * ab, 2 * ab);
            for (std::int64_t g : {std::int64_t(a), std::int64_t(b)}) {
                for (bool first : {false, true}) {
                    const auto c1 = serial::nonstrict_critical(*table, wc, g, {-ab, -1}, first);
                    REQUIRE(c1 == parallel::nonstrict_critical(*table, wc, g, {-ab, -1}, first));
                    const auto wcb = window_of<Integer>(h, -2 * ab, 2 * ab);
                    REQUIRE(c1 == serial::nonstrict_critical(*table, wcb, g, {-ab, -1}, first));
                }
            }
        }
    }
}
