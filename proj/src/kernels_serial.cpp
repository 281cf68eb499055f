#include "hdepth/kernels.hpp"

#include "kernels_detail.hpp"

#include <algorithm>
#include <numeric>

namespace hdepth::kernels {

GapPoset build_gap_poset(const SemigroupPair& s)
{
    GapPoset poset;
    poset.alpha = s.alpha();
    poset.beta = s.beta();
    poset.gaps = s.gaps();
    const std::size_t n = poset.gaps.size();
    poset.presentation.reserve(n);
    for (auto e : poset.gaps)
        poset.presentation.push_back(s.present(e));
    poset.successors.resize(n);
    for (std::size_t e = 0; e < n; ++e) {
        const auto& pe = poset.presentation[e];
        for (std::size_t f = 0; f < n; ++f) {
            const auto& pf = poset.presentation[f];
            if (pe.a > pf.a && pe.b < pf.b)
                poset.successors[e].push_back(static_cast<std::uint32_t>(f));
        }
    }
    return poset;
}

bool is_critical(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs, std::int64_t m,
                 std::int64_t g)
{
    const bool left = std::any_of(lhs.begin(), lhs.end(),
                                  [&](std::int64_t i) { return m + i < 0 && floor_mod(m + i, g) == 0; });
    if (!left)
        return false;
    return std::any_of(rhs.begin(), rhs.end(),
                       [&](std::int64_t j) { return m + j >= 0 && floor_mod(m + j, g) == 0; });
}

namespace serial {

CoupleTable enumerate(const GapPoset& poset)
{
    CoupleTable table;
    const std::int64_t empty_lhs[] = {0};
    const std::int64_t empty_rhs[] = {poset.alpha * poset.beta};
    table.push(empty_lhs, empty_rhs);
    detail::ChainWalker walker(poset, table);
    for (std::uint32_t e = 0; e < poset.gaps.size(); ++e)
        walker.walk_from(e);
    return table;
}

Integer count_chains(const GapPoset& poset)
{
    // Successors have strictly larger b, so descending b is a topological order.
    const std::size_t n = poset.gaps.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return poset.presentation[x].b > poset.presentation[y].b;
    });
    std::vector<Integer> from(n);
    Integer total = 1;
    for (auto e : order) {
        Integer c = 1;
        for (auto f : poset.successors[e])
            c += from[f];
        from[e] = c;
        total += c;
    }
    return total;
}

template <class T>
std::optional<ScanHit> star_scan(const CoupleTable& table, const CoefficientWindow<T>& h, ShiftRange shifts)
{
    if (shifts.lo > shifts.hi)
        return std::nullopt;
    std::vector<T> slack;
    for (std::size_t k = 0; k < table.size(); ++k) {
        detail::inequality_slack(table.lhs(k), table.rhs(k), h, shifts, slack);
        if (auto n = detail::first_negative(slack, shifts.lo))
            return ScanHit{k, *n};
    }
    return std::nullopt;
}

template <class T>
std::vector<ScanHit> nonstrict_critical(const CoupleTable& table, const CoefficientWindow<T>& h, std::int64_t g,
                                        ShiftRange shifts, bool stop_at_first)
{
    std::vector<ScanHit> hits;
    if (shifts.lo > shifts.hi)
        return hits;
    std::vector<T> slack;
    std::vector<std::int64_t> ms;
    for (std::size_t k = 0; k < table.size(); ++k) {
        detail::tight_critical_shifts(table.lhs(k), table.rhs(k), h, g, shifts, slack, ms, stop_at_first);
        for (auto m : ms) {
            hits.push_back({k, m});
            if (stop_at_first)
                return hits;
        }
    }
    return hits;
}

template std::optional<ScanHit> star_scan(const CoupleTable&, const CoefficientWindow<std::int64_t>&, ShiftRange);
template std::optional<ScanHit> star_scan(const CoupleTable&, const CoefficientWindow<Integer>&, ShiftRange);
template std::vector<ScanHit> nonstrict_critical(const CoupleTable&, const CoefficientWindow<std::int64_t>&,
                                                 std::int64_t, ShiftRange, bool);
template std::vector<ScanHit> nonstrict_critical(const CoupleTable&, const CoefficientWindow<Integer>&,
                                                 std::int64_t, ShiftRange, bool);

} // namespace serial
} // namespace hdepth::kernels
