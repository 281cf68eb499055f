#include "helpers.hpp"

#include "hdepth/errors.hpp"
#include "hdepth/oracle.hpp"
#include "hdepth/star.hpp"

#include <doctest.h>

#include <random>

using namespace hdepth;
using testing_support::free_plus_two_points;
using testing_support::free_rank_one;
using testing_support::pair;
using testing_support::sparse_head;

namespace {

/// Recomputes both sides of a certificate from an independent expansion.
void require_certificate(const RationalSeries& h, const Violation& v)
{
    const auto lo = v.n - 1;
    const auto c = testing_support::recurrence_coeffs(h, lo, v.n + h.alpha() * h.beta() + 1);
    Integer left = 0, right = 0;
    for (auto i : v.couple.lhs)
        left += c[static_cast<std::size_t>(v.n + i - lo)];
    for (auto j : v.couple.rhs)
        right += c[static_cast<std::size_t>(v.n + j - lo)];
    REQUIRE(left == v.lhs);
    REQUIRE(right == v.rhs);
    REQUIRE(v.lhs > v.rhs);
    REQUIRE(is_fundamental(h.pair(), v.couple.lhs, v.couple.rhs));
}

/// Direct definition over a wide shift range, for cross-checking.
bool star_by_definition(const RationalSeries& h, std::int64_t margin)
{
    const auto s = h.pair();
    const std::int64_t ab = s.product();
    if (h.is_zero())
        return true;
    const std::int64_t lo = h.low() - ab - margin, hi = std::max<std::int64_t>(h.high(), 0) + ab + margin;
    const auto c = testing_support::recurrence_coeffs(h, lo, hi + ab);
    for (const auto& couple : enumerate_couples(s))
        for (std::int64_t n = lo; n <= hi; ++n) {
            Integer left = 0, right = 0;
            for (auto i : couple.lhs)
                left += c[static_cast<std::size_t>(n + i - lo)];
            for (auto j : couple.rhs)
                right += c[static_cast<std::size_t>(n + j - lo)];
            if (left > right)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("star verdicts on the worked examples")
{
    CHECK(check_star(free_rank_one(3, 5)).holds);
    CHECK(check_star(to_rational(3, 5, {{0, 1, DenomSet::only_alpha()}})).holds);

    const auto h31 = free_plus_two_points();
    const auto v31 = check_star(h31);
    REQUIRE_FALSE(v31.holds);
    CHECK(v31.violation->couple == FundamentalCouple{{0, 1}, {6, 10}});
    CHECK(v31.violation->n == 1);
    CHECK(v31.violation->lhs == 2);
    CHECK(v31.violation->rhs == 1);
    require_certificate(h31, *v31.violation);

    const auto hs = sparse_head();
    const auto vs = check_star(hs);
    REQUIRE_FALSE(vs.holds);
    CHECK(vs.violation->couple == FundamentalCouple{{0, 1, 2}, {6, 7, 5}});
    CHECK(vs.violation->n == -1);
    CHECK(vs.violation->lhs == 2);
    CHECK(vs.violation->rhs == 1);
    require_certificate(hs, *vs.violation);

    CHECK(check_star(RationalSeries::zero(3, 5)).holds);
    CHECK_THROWS_AS(check_star(to_rational(3, 5, {{0, -1, DenomSet::none()}})), NotNonnegative);
}

TEST_CASE("the degenerate alpha = 1 case is h_n <= h_{n+beta}")
{
    const auto s = pair(1, 4);
    CHECK(enumerate_couples(s) == std::vector<FundamentalCouple>{{{0}, {4}}});
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly num;
        for (int e = 0; e < 8; ++e)
            num.add_term(e, c(rng));
        const RationalSeries h(s, num, false, true);
        bool expected = true;
        const auto v = coeffs(h, -4, 20);
        for (std::size_t n = 0; n + 4 < v.size(); ++n)
            expected = expected && v[n] <= v[n + 4];
        REQUIRE(check_star(h).holds == expected);
    }
}

TEST_CASE("non-coprime weights are decided slice by slice")
{
    const RationalSeries free24(2, 4, LaurentPoly::monomial(0), true, true);
    const auto v = check_star_general(free24);
    CHECK(v.holds);
    CHECK(v.delta == 2);
    CHECK(v.slices.size() == 2);
    const RationalSeries only_even(2, 4, LaurentPoly::monomial(0), true, false);
    CHECK(check_star_general(only_even).holds);
    const RationalSeries bad(2, 4, LaurentPoly{{0, 1}, {2, 1}}, false, false);
    const auto vb = check_star_general(bad);
    CHECK_FALSE(vb.holds);
    CHECK_FALSE(vb.slices[0].holds);
    CHECK(vb.slices[1].holds);
    CHECK(check_star_general(free_rank_one(3, 5)).delta == 1);
}

TEST_CASE("critical inequalities")
{
    const auto h29 = testing_support::five_cyclic_atoms();
    const auto hits = find_nonstrict_critical(h29, Generator::beta);
    bool found = false;
    for (const auto& hit : hits) {
        CHECK_FALSE(hit.strict);
        CHECK(hit.side == Generator::beta);
        found = found || (hit.couple == FundamentalCouple{{0, 5}, {9, 8}} && hit.m == -4);
    }
    CHECK(found);
    CHECK(has_nonstrict_critical(h29, Generator::beta));

    for (int k = 1; k <= 3; ++k) {
        const RationalSeries free_k(pair(3, 5), LaurentPoly::monomial(0, k), true, true);
        CHECK(find_nonstrict_critical(free_k, Generator::alpha).empty());
        CHECK_FALSE(has_nonstrict_critical(free_k, Generator::alpha));
    }
    CHECK(has_nonstrict_critical(to_rational(3, 5, {{0, 1, DenomSet::only_alpha()}}), Generator::beta));
}

TEST_CASE("balanced inequalities")
{
    const auto f = free_rank_one(3, 5);
    CHECK(check_balanced_inequality(f, {{0, 0}, {15, 15}}));
    CHECK(check_balanced_inequality(f, {{-9, -7}, {-5, -3}}));
    // A fundamental couple at shift n is the same test.
    const auto h31 = free_plus_two_points();
    for (const auto& c : enumerate_couples(pair(3, 5)))
        for (std::int64_t n = -16; n <= 20; ++n) {
            const BalancedCouple shifted = shift_couple({c.lhs, c.rhs}, -n);
            const auto vals = coeffs(h31, n - 1, n + 16);
            Integer l = 0, r = 0;
            for (auto i : c.lhs)
                l += vals[static_cast<std::size_t>(i + 1)];
            for (auto j : c.rhs)
                r += vals[static_cast<std::size_t>(j + 1)];
            REQUIRE(check_balanced_inequality(h31, shifted) == (l <= r));
        }
}

TEST_CASE("window-sum inequality")
{
    CHECK(check_inequality_24(free_rank_one(3, 5)));
    CHECK(check_inequality_24(to_rational(3, 5, {{0, 1, DenomSet::only_alpha()}})));
    CHECK_FALSE(check_inequality_24(free_plus_two_points()));
    CHECK(inequality_24_failure(free_plus_two_points()) == 0);
    // Cross-check the failure index with a direct window scan.
    const auto h = free_plus_two_points();
    const auto v = coeffs(h, -10, 40);
    std::optional<std::int64_t> direct;
    for (std::int64_t n = -10; n + 5 + 2 <= 40 && !direct; ++n) {
        Integer l = 0, r = 0;
        for (std::int64_t i = 0; i < 3; ++i) {
            l += v[static_cast<std::size_t>(n + i + 10)];
            r += v[static_cast<std::size_t>(n + 5 + i + 10)];
        }
        if (l > r)
            direct = n;
    }
    CHECK(direct == 0);

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> sh(-6, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = trial % 2 ? pair(3, 5) : pair(4, 7);
        const std::int64_t a = s.alpha(), b = s.beta();
        TermList t{{sh(rng), 1, trial % 3 ? DenomSet::only_alpha() : DenomSet::both()},
                   {sh(rng), 1, DenomSet::none()},
                   {sh(rng), 2, DenomSet::none()}};
        const auto g = to_rational(s, t);
        const std::int64_t lo = g.low() - a - b, hi = stabilization_index(g) + 2 * s.product();
        const auto c = coeffs(g, lo, hi + a + b);
        std::optional<std::int64_t> first;
        for (std::int64_t n = lo; n <= hi && !first; ++n) {
            Integer l = 0, r = 0;
            for (std::int64_t i = 0; i < a; ++i) {
                l += c[static_cast<std::size_t>(n + i - lo)];
                r += c[static_cast<std::size_t>(n + b + i - lo)];
            }
            if (l > r)
                first = n;
        }
        REQUIRE(inequality_24_failure(g) == first);
    }
}

TEST_CASE("first violation shift of a fixed family")
{
    const auto h31 = free_plus_two_points();
    CHECK(first_violation_shift(h31, std::vector<std::int64_t>{0, 1}, std::vector<std::int64_t>{6, 10}) == 1);
    CHECK_FALSE(first_violation_shift(free_rank_one(3, 5), std::vector<std::int64_t>{0, 1, 2},
                                      std::vector<std::int64_t>{4, 5, 6})
                    .has_value());
    CHECK_THROWS_AS(first_violation_shift(h31, std::vector<std::int64_t>{0}, std::vector<std::int64_t>{}), InputError);
}

TEST_CASE("the window inequality with right side {4,5,6} is not necessary")
{
    // A single R/(X) summand: h_{-2} + h_{-1} + h_0 = 1 > 0 = h_2 + h_3 + h_4.
    const auto h = to_rational(3, 5, {{0, 1, DenomSet::only_beta()}});
    CHECK(check_star(h).holds);
    CHECK(first_violation_shift(h, std::vector<std::int64_t>{0, 1, 2}, std::vector<std::int64_t>{4, 5, 6}) == -2);
    CHECK_FALSE(first_violation_shift(h, std::vector<std::int64_t>{0, 1, 2}, std::vector<std::int64_t>{5, 6, 7}));
}

TEST_CASE("verdict is shift invariant")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> sh(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        for (const auto& h : {free_plus_two_points(), sparse_head(),
                              oracle::random_star_series(pair(4, 5), rng(), 3, 8)}) {
            const auto s = sh(rng);
            const auto a = check_star(h), b = check_star(shift(h, s));
            REQUIRE(a.holds == b.holds);
            if (!a.holds) {
                REQUIRE(a.violation->couple == b.violation->couple);
                REQUIRE(a.violation->n + s == b.violation->n);
            }
        }
    }
}

TEST_CASE("atom combinations satisfy the couple inequalities")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto pairs = std::vector<SemigroupPair>{pair(2, 3), pair(3, 5), pair(4, 7), pair(5, 6)};
        const auto& s = pairs[seed % pairs.size()];
        const auto h = oracle::random_star_series(s, seed, 1 + static_cast<int>(seed % 6), 15);
        REQUIRE(is_nonnegative(h));
        REQUIRE(check_star(h).holds);
        REQUIRE(check_inequality_24(h));
    }
}

TEST_CASE("decision matches the definition on a wide window")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::int64_t> sh(0, 9);
    std::uniform_int_distribution<int> c(1, 2), coin(0, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const auto s = trial % 2 ? pair(3, 5) : pair(4, 5);
        TermList t{{sh(rng), 1, coin(rng) ? DenomSet::only_alpha() : DenomSet::both()}};
        for (int k = coin(rng); k > 0; --k)
            t.push_back({sh(rng), c(rng), DenomSet::none()});
        const auto h = to_rational(s, t);
        if (!is_nonnegative(h))
            continue;
        const auto v = check_star(h);
        REQUIRE(v.holds == star_by_definition(h, 3 * s.product()));
        if (!v.holds)
            require_certificate(h, *v.violation);
    }
}

TEST_CASE("published (3,5) inequalities hold on atom combinations")
{
    const auto corpus = oracle::make_corpus(pair(3, 5), 8, 200, 5, 15);
    const auto vectors = oracle::regression_vectors_3_5();
    REQUIRE(vectors.size() == 7);
    CHECK(vectors[1].lhs == std::vector<std::int64_t>{0, 1});
    CHECK(vectors[5].rhs == std::vector<std::int64_t>{5, 6, 7});
    for (const auto& member : corpus.members) {
        REQUIRE(check_star(member.series).holds);
        for (const auto& v : vectors)
            REQUIRE_FALSE(first_violation_shift(member.series, v.lhs, v.rhs).has_value());
    }
}
