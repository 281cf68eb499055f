#include "hdepth/kernels.hpp"

#include "kernels_detail.hpp"

#include <atomic>
#include <limits>

#ifdef HDEPTH_HAVE_OPENMP
#include <omp.h>
#endif

namespace hdepth::kernels {

int thread_count()
{
#ifdef HDEPTH_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

CoupleTable enumerate(const GapPoset& poset)
{
    // One subtree per chain start; concatenating them in start order
    // reproduces the serial preorder exactly.
    const auto n = static_cast<std::int64_t>(poset.gaps.size());
    std::vector<CoupleTable> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t e = 0; e < n; ++e) {
        detail::ChainWalker walker(poset, parts[static_cast<std::size_t>(e)]);
        walker.walk_from(static_cast<std::uint32_t>(e));
    }
    CoupleTable table;
    const std::int64_t empty_lhs[] = {0};
    const std::int64_t empty_rhs[] = {poset.alpha * poset.beta};
    table.push(empty_lhs, empty_rhs);
    for (const auto& part : parts)
        table.append(part);
    return table;
}

template <class T>
std::optional<ScanHit> star_scan(const CoupleTable& table, const CoefficientWindow<T>& h, ShiftRange shifts)
{
    if (shifts.lo > shifts.hi)
        return std::nullopt;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const auto count = static_cast<std::int64_t>(table.size());
    std::atomic<std::size_t> best{none};
    std::vector<std::int64_t> first_n(table.size());
#pragma omp parallel
    {
        std::vector<T> slack;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t k = 0; k < count; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            if (idx > best.load(std::memory_order_relaxed))
                continue;
            detail::inequality_slack(table.lhs(idx), table.rhs(idx), h, shifts, slack);
            if (auto n = detail::first_negative(slack, shifts.lo)) {
                first_n[idx] = *n;
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    const std::size_t k = best.load();
    if (k == none)
        return std::nullopt;
    return ScanHit{k, first_n[k]};
}

template <class T>
std::vector<ScanHit> nonstrict_critical(const CoupleTable& table, const CoefficientWindow<T>& h, std::int64_t g,
                                        ShiftRange shifts, bool stop_at_first)
{
    std::vector<ScanHit> hits;
    if (shifts.lo > shifts.hi)
        return hits;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const auto count = static_cast<std::int64_t>(table.size());
    std::vector<std::vector<std::int64_t>> per_couple(table.size());
    std::atomic<std::size_t> best{none};
#pragma omp parallel
    {
        std::vector<T> slack;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t k = 0; k < count; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            if (stop_at_first && idx > best.load(std::memory_order_relaxed))
                continue;
            auto& ms = per_couple[idx];
            detail::tight_critical_shifts(table.lhs(idx), table.rhs(idx), h, g, shifts, slack, ms, stop_at_first);
            if (stop_at_first && !ms.empty()) {
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    if (stop_at_first) {
        const std::size_t k = best.load();
        if (k != none)
            hits.push_back({k, per_couple[k].front()});
        return hits;
    }
    for (std::size_t k = 0; k < per_couple.size(); ++k)
        for (auto m : per_couple[k])
            hits.push_back({k, m});
    return hits;
}

template std::optional<ScanHit> star_scan(const CoupleTable&, const CoefficientWindow<std::int64_t>&, ShiftRange);
template std::optional<ScanHit> star_scan(const CoupleTable&, const CoefficientWindow<Integer>&, ShiftRange);
template std::vector<ScanHit> nonstrict_critical(const CoupleTable&, const CoefficientWindow<std::int64_t>&,
                                                 std::int64_t, ShiftRange, bool);
template std::vector<ScanHit> nonstrict_critical(const CoupleTable&, const CoefficientWindow<Integer>&,
                                                 std::int64_t, ShiftRange, bool);

} // namespace parallel
} // namespace hdepth::kernels
