#include "hdepth/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hdepth {

const char* to_string(Provenance p)
{
    switch (p) {
    case Provenance::exact_module_input:
        return "exact_module_input";
    case Provenance::dim1_greedy:
        return "dim1_greedy";
    case Provenance::tail_peel_heuristic:
        return "tail_peel_heuristic";
    case Provenance::free_numerator:
        return "free_numerator";
    }
    return "unknown";
}

std::optional<int> pd(const RationalSeries& h, std::int64_t d)
{
    if (d < 1)
        throw input_error("BadArgument", "pd requires d >= 1");
    if (!is_nonnegative(h))
        throw NotNonnegative();
    if (h.is_zero())
        return std::nullopt;
    constexpr int cap = 64;
    RationalSeries cur = h;
    for (int r = 0; r < cap; ++r) {
        RationalSeries next = multiply_one_minus(cur, d);
        if (!is_nonnegative(next))
            return r;
        cur = std::move(next);
    }
    throw InvariantBroken("pd exceeded " + std::to_string(cap) + " factors");
}

namespace {

std::optional<Decomposition> free_witness(const RationalSeries& h)
{
    const LaurentPoly q = h.canonical_numerator();
    if (!q.is_nonnegative())
        return std::nullopt;
    Decomposition d{{}, Provenance::free_numerator};
    for (const auto& [e, c] : q.terms())
        d.atoms.push_back({e, c, DenomSet::both()});
    return d;
}

void require_star(const RationalSeries& h)
{
    auto verdict = check_star(h);
    if (!verdict.holds)
        throw StarFails(std::move(*verdict.violation));
}

/// One greedy step may subtract the side-g atom at the lowest support index
/// exactly when that keeps the series nonnegative (c_g > 0) and no tight
/// g-critical inequality would be pushed below zero.
bool step_is_legal(const RationalSeries& normalized, Generator g)
{
    return c_min(normalized, g) > 0 && !has_nonstrict_critical(normalized, g);
}

Decomposition greedy(RationalSeries cur, const GreedyOptions& options)
{
    const auto s = cur.pair();
    std::vector<Term> steps;
    Integer budget = options.verify_steps ? sigma(cur) : Integer(0);
    while (!cur.is_zero()) {
        const std::int64_t low = cur.low();
        const RationalSeries normalized = shift(cur, -low);
        Generator side;
        if (step_is_legal(normalized, Generator::alpha))
            side = Generator::alpha;
        else if (step_is_legal(normalized, Generator::beta))
            side = Generator::beta;
        else
            throw InvariantBroken("no legal greedy step at shift " + std::to_string(low));
        const DenomSet denom = DenomSet::of(side);
        cur = subtract_atom(cur, low, denom).simplified();
        steps.push_back({low, 1, denom});
        if (options.verify_steps) {
            if (!is_nonnegative(cur) || !check_star(cur).holds)
                throw InvariantBroken("greedy step left a series outside the cone");
            const Integer expected = budget - (side == Generator::alpha ? s.beta() : s.alpha());
            if (sigma(cur) != expected)
                throw InvariantBroken("sigma did not drop by the atom's stable mass");
            budget = expected;
        }
    }
    return {normalize_terms(std::move(steps)), Provenance::dim1_greedy};
}

void append_terms(TermList& to, const TermList& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

} // namespace

Decomposition decompose_dim1(const RationalSeries& h, const GreedyOptions& options)
{
    h.pair();
    if (dimension(h) > 1)
        throw input_error("DimensionTooHigh", "greedy decomposition needs dimension <= 1");
    require_star(h);
    return greedy(h.simplified(), options);
}

Decomposition decompose(const RationalSeries& h)
{
    h.pair();
    if (!is_nonnegative(h))
        throw NotNonnegative();
    if (auto d = free_witness(h))
        return *d;
    require_star(h);
    if (dimension(h) <= 1)
        return greedy(h.simplified(), {});

    // Peel the free part K t^{r ab} / ((1 - t^alpha)(1 - t^beta)) at growing
    // r until the remainder is a nonnegative dimension-1 series in the cone.
    const std::int64_t ab = h.alpha() * h.beta();
    const Integer mass = h.canonical_numerator().eval_at_one();
    const std::int64_t r_first = -floor_div(-h.low(), ab);
    const std::int64_t r_last = (std::max<std::int64_t>(h.high(), 0) + 10 * ab) / ab;
    for (std::int64_t r = r_first; r <= r_last; ++r) {
        const RationalSeries rest = add(h, RationalSeries(h.alpha(), h.beta(),
                                                          LaurentPoly::monomial(r * ab, -mass), true, true));
        if (!is_nonnegative(rest) || dimension(rest) > 1 || !check_star(rest).holds)
            continue;
        Decomposition d = greedy(rest.simplified(), {});
        d.atoms.push_back({r * ab, mass, DenomSet::both()});
        d.atoms = normalize_terms(std::move(d.atoms));
        d.provenance = Provenance::tail_peel_heuristic;
        return d;
    }
    throw NotFound();
}

Decomposition decompose(const SemigroupPair& s, const TermList& terms)
{
    TermList q0, qx, q2;
    for (const auto& t : terms) {
        if (t.coeff < 1)
            throw input_error("BadArgument", "term coefficients must be positive");
        if (t.denom.empty())
            q0.push_back(t);
        else if (t.denom.size() == 1)
            qx.push_back(t);
        else
            q2.push_back(t);
    }
    const RationalSeries h = to_rational(s, terms);
    if (q0.empty())
        return {normalize_terms(terms), Provenance::exact_module_input};
    require_star(h);
    if (q2.empty())
        return greedy(h.simplified(), {});

    const std::int64_t ab = s.product();
    std::int64_t q0_top = q0.front().shift, q2_low = q2.front().shift;
    for (const auto& t : q0)
        q0_top = std::max(q0_top, t.shift);
    for (const auto& t : q2)
        q2_low = std::min(q2_low, t.shift);
    // Smallest r >= 1 with r ab > deg(Q0) + ab; a negative shift in Q2 pushes r
    // up so that H' still agrees with H below deg(Q0) + ab.
    std::int64_t r = 1;
    while (r * ab + std::min<std::int64_t>(q2_low, 0) <= q0_top + ab)
        ++r;
    TermList peeled;
    for (const auto& t : q2)
        peeled.push_back({t.shift + r * ab, t.coeff, DenomSet::both()});
    RationalSeries rest = h;
    for (const auto& t : peeled)
        rest = add(rest, RationalSeries(s, LaurentPoly::monomial(t.shift, -t.coeff), true, true));
    Decomposition d;
    try {
        d = decompose_dim1(rest);
    } catch (const StarFails&) {
        throw InvariantBroken("dimension reduction produced a series outside the cone");
    }
    append_terms(d.atoms, peeled);
    d.atoms = normalize_terms(std::move(d.atoms));
    d.provenance = Provenance::dim1_greedy;
    return d;
}

bool verify_decomposition(const RationalSeries& h, const Decomposition& d)
{
    for (const auto& t : d.atoms)
        if (t.denom.empty() || t.coeff < 1)
            return false;
    return to_rational(h.alpha(), h.beta(), d.atoms) == h;
}

std::string witness_module(const Decomposition& d)
{
    // Free summands first, then R/(Y), R/(X), R/m; ascending shift within each.
    auto rank = [](DenomSet den) { return den.alpha && den.beta ? 0 : den.alpha ? 1 : den.beta ? 2 : 3; };
    std::map<std::pair<int, std::int64_t>, Integer> parts;
    for (const auto& t : d.atoms)
        parts[{rank(t.denom), t.shift}] += t.coeff;
    static const char* const base[] = {"R", "R/(Y)", "R/(X)", "R/𝔪"};
    std::string out;
    for (const auto& [key, count] : parts) {
        if (count == 0)
            continue;
        const auto [kind, k] = key;
        std::string piece = base[kind];
        if (k != 0) {
            if (kind != 0)
                piece = "(" + piece + ")";
            piece += k > 0 ? "(−" + std::to_string(k) + ")" : "(" + std::to_string(-k) + ")";
        }
        if (count != 1)
            piece += "^" + count.str();
        if (!out.empty())
            out += " ⊕ ";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

namespace {

DepthReport depth_coprime(const RationalSeries& h, const std::optional<TermList>& terms)
{
    DepthReport report;
    if (auto d = free_witness(h)) {
        report.hdep = 2;
        report.witness = std::move(d);
        return report;
    }
    report.verdict = check_star(h);
    if (!report.verdict.holds) {
        report.hdep = 0;
        return report;
    }
    report.hdep = 1;
    try {
        report.witness = terms ? decompose(h.pair(), *terms) : decompose(h);
    } catch (const NotFound&) {
        report.caveat = "module-series assumption required for constructive witness";
    }
    return report;
}

} // namespace

DepthReport hilbert_depth(const RationalSeries& h)
{
    if (!is_nonnegative(h))
        throw NotNonnegative();
    const std::int64_t delta = std::gcd(h.alpha(), h.beta());
    if (delta == 1)
        return depth_coprime(h, std::nullopt);
    DepthReport report;
    report.hdep = 2;
    for (std::int64_t k = 0; k < delta; ++k) {
        const RationalSeries slice = veronese(h, delta, k);
        if (slice.is_zero()) {
            report.slice_depths.push_back(2);
            continue;
        }
        const DepthReport part = depth_coprime(slice, std::nullopt);
        report.slice_depths.push_back(part.hdep);
        if (part.hdep < report.hdep) {
            report.hdep = part.hdep;
            report.verdict = part.verdict;
        }
    }
    return report;
}

DepthReport hilbert_depth(const SemigroupPair& s, const TermList& terms)
{
    const RationalSeries h = to_rational(s, terms);
    if (!is_nonnegative(h))
        throw NotNonnegative();
    return depth_coprime(h, terms);
}

int nu(const RationalSeries& h)
{
    return hilbert_depth(h).hdep;
}

int nu(const SemigroupPair& s, const TermList& terms)
{
    return hilbert_depth(s, terms).hdep;
}

} // namespace hdepth
