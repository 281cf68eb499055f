#include "hdepth/series.hpp"

#include "hdepth/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hdepth {

TermList normalize_terms(TermList terms)
{
    std::map<std::pair<DenomSet, std::int64_t>, Integer> merged;
    for (auto& t : terms)
        merged[{t.denom, t.shift}] += t.coeff;
    TermList out;
    out.reserve(merged.size());
    for (auto& [key, c] : merged)
        if (c != 0)
            out.push_back(Term{key.second, std::move(c), key.first});
    return out;
}

RationalSeries::RationalSeries(std::int64_t alpha, std::int64_t beta, LaurentPoly num, bool den_alpha,
                               bool den_beta)
    : alpha_(alpha), beta_(beta), num_(std::move(num)), den_alpha_(den_alpha), den_beta_(den_beta)
{
    if (alpha < 1 || beta < 1)
        throw InputError("NonPositive", "weights must be positive");
    if (alpha_ > beta_) {
        std::swap(alpha_, beta_);
        std::swap(den_alpha_, den_beta_);
    }
}

RationalSeries RationalSeries::zero(std::int64_t alpha, std::int64_t beta)
{
    return RationalSeries(alpha, beta, LaurentPoly{}, true, true);
}

LaurentPoly RationalSeries::canonical_numerator() const
{
    LaurentPoly p = num_;
    if (!den_alpha_)
        p = p.times_one_minus(alpha_);
    if (!den_beta_)
        p = p.times_one_minus(beta_);
    return p;
}

RationalSeries RationalSeries::with_full_denominator() const
{
    return RationalSeries(alpha_, beta_, canonical_numerator(), true, true);
}

RationalSeries RationalSeries::simplified() const
{
    LaurentPoly p = num_;
    bool da = den_alpha_, db = den_beta_;
    if (da) {
        if (auto q = p.divided_by_one_minus(alpha_)) {
            p = std::move(*q);
            da = false;
        }
    }
    if (db) {
        if (auto q = p.divided_by_one_minus(beta_)) {
            p = std::move(*q);
            db = false;
        }
    }
    return RationalSeries(alpha_, beta_, std::move(p), da, db);
}

bool operator==(const RationalSeries& a, const RationalSeries& b)
{
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.canonical_numerator() == b.canonical_numerator();
}

RationalSeries to_rational(std::int64_t alpha, std::int64_t beta, const TermList& terms)
{
    RationalSeries probe(alpha, beta, LaurentPoly{}, true, true);
    alpha = probe.alpha();
    beta = probe.beta();
    LaurentPoly num;
    for (const auto& t : terms) {
        LaurentPoly p = LaurentPoly::monomial(t.shift, t.coeff);
        if (!t.denom.alpha)
            p = p.times_one_minus(alpha);
        if (!t.denom.beta)
            p = p.times_one_minus(beta);
        num += p;
    }
    return RationalSeries(alpha, beta, std::move(num), true, true);
}

std::vector<Integer> coeffs(const RationalSeries& h, std::int64_t from, std::int64_t to)
{
    if (from > to)
        throw InputError("BadRange", "coefficient window requires from <= to");
    const std::size_t want = static_cast<std::size_t>(to - from + 1);
    if (h.is_zero() || to < h.low())
        return std::vector<Integer>(want);
    const std::int64_t lo = std::min(from, h.low());
    if (to - lo > (std::int64_t{1} << 26))
        throw InputError("TooLarge", "coefficient window too wide");
    std::vector<Integer> dense(static_cast<std::size_t>(to - lo + 1));
    for (const auto& [e, c] : h.numerator().terms()) {
        if (e > to)
            break;
        dense[static_cast<std::size_t>(e - lo)] = c;
    }
    // Division by (1 - t^g) is a strided prefix sum.
    auto accumulate = [&](std::int64_t g) {
        for (std::size_t i = static_cast<std::size_t>(g); i < dense.size(); ++i)
            dense[i] += dense[i - g];
    };
    if (h.den_alpha())
        accumulate(h.alpha());
    if (h.den_beta())
        accumulate(h.beta());
    return {dense.begin() + (from - lo), dense.end()};
}

Integer coefficient(const RationalSeries& h, std::int64_t n)
{
    return coeffs(h, n, n).front();
}

std::int64_t stabilization_index(const RationalSeries& h)
{
    const std::int64_t d = h.is_zero() ? 0 : std::max<std::int64_t>(0, h.high());
    return d + h.alpha() * h.beta();
}

bool is_nonnegative(const RationalSeries& h)
{
    if (h.is_zero())
        return true;
    const std::int64_t delta = std::gcd(h.alpha(), h.beta());
    if (delta > 1) {
        for (std::int64_t k = 0; k < delta; ++k)
            if (!is_nonnegative(veronese(h, delta, k)))
                return false;
        return true;
    }
    // Past D the coefficients repeat with period alpha*beta, shifted by num(1)
    // per period when both factors are present; one full period beyond D is
    // therefore conclusive.
    const std::int64_t last = std::max(h.high(), h.low()) + h.alpha() * h.beta();
    for (const auto& c : coeffs(h, h.low(), last))
        if (c < 0)
            return false;
    if (h.den_alpha() && h.den_beta() && h.numerator().eval_at_one() < 0)
        return false;
    return true;
}

int dimension(const RationalSeries& h)
{
    if (h.is_zero())
        return 0;
    LaurentPoly p = h.numerator();
    int cancelled = 0;
    while (cancelled < h.den_count() && p.eval_at_one() == 0) {
        p = *p.divided_by_one_minus(1);
        ++cancelled;
    }
    return h.den_count() - cancelled;
}

Integer sigma(const RationalSeries& h)
{
    const auto s = h.pair();
    if (dimension(h) > 1)
        throw InputError("DimensionTooHigh", "sigma is defined for series of dimension <= 1");
    if (h.is_zero())
        return 0;
    const std::int64_t n = stabilization_index(h);
    Integer sum = 0;
    for (const auto& c : coeffs(h, n, n + s.product() - 1))
        sum += c;
    return sum;
}

Integer c_min(const RationalSeries& h, Generator g)
{
    const auto s = h.pair();
    const std::int64_t step = g == Generator::alpha ? s.alpha() : s.beta();
    const std::int64_t upper = stabilization_index(h);
    const auto window = coeffs(h, 0, upper);
    Integer best = window[static_cast<std::size_t>(step)];
    for (std::int64_t n = 2 * step; n <= upper; n += step)
        best = std::min(best, window[static_cast<std::size_t>(n)]);
    return best;
}

RationalSeries veronese(const RationalSeries& h, std::int64_t delta, std::int64_t k)
{
    if (delta < 1 || h.alpha() % delta != 0 || h.beta() % delta != 0)
        throw InputError("BadDelta", "delta must divide both weights");
    if (k < 0 || k >= delta)
        throw InputError("BadResidue", "residue must lie in [0, delta)");
    LaurentPoly num;
    for (const auto& [e, c] : h.numerator().terms())
        if (floor_mod(e, delta) == k)
            num.add_term(floor_div(e, delta), c);
    return RationalSeries(h.alpha() / delta, h.beta() / delta, std::move(num), h.den_alpha(), h.den_beta());
}

RationalSeries add(const RationalSeries& a, const RationalSeries& b)
{
    if (a.alpha() != b.alpha() || a.beta() != b.beta())
        throw InputError("WeightMismatch", "series are over different weights");
    const bool da = a.den_alpha() || b.den_alpha();
    const bool db = a.den_beta() || b.den_beta();
    auto lift = [&](const RationalSeries& x) {
        LaurentPoly p = x.numerator();
        if (da && !x.den_alpha())
            p = p.times_one_minus(x.alpha());
        if (db && !x.den_beta())
            p = p.times_one_minus(x.beta());
        return p;
    };
    return RationalSeries(a.alpha(), a.beta(), lift(a) + lift(b), da, db);
}

RationalSeries shift(const RationalSeries& h, std::int64_t s)
{
    return RationalSeries(h.alpha(), h.beta(), h.numerator().shifted(s), h.den_alpha(), h.den_beta());
}

RationalSeries subtract_atom(const RationalSeries& h, std::int64_t s, DenomSet denom)
{
    const RationalSeries atom(h.alpha(), h.beta(), LaurentPoly::monomial(s, -1), denom.alpha, denom.beta);
    return add(h, atom);
}

RationalSeries multiply_one_minus(const RationalSeries& h, std::int64_t d, int r)
{
    if (d < 1 || r < 0)
        throw InputError("BadArgument", "multiply_one_minus requires d >= 1, r >= 0");
    LaurentPoly p = h.numerator();
    for (int i = 0; i < r; ++i)
        p = p.times_one_minus(d);
    return RationalSeries(h.alpha(), h.beta(), std::move(p), h.den_alpha(), h.den_beta());
}

} // namespace hdepth
