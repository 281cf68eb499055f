#pragma once

// Scan kernels over the gap poset and the couple table.
//
// Every kernel exists twice: serial:: is the plain reference loop kept for
// equivalence tests and benchmarking, parallel:: is the OpenMP version used
// by the public API. Both return identical results, including which
// violation is reported first.

#include "hdepth/couples.hpp"
#include "hdepth/laurent.hpp"
#include "hdepth/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hdepth::kernels {

/// Gaps with their presentations and strict-order successor lists.
struct GapPoset {
    std::int64_t alpha = 1;
    std::int64_t beta = 1;
    std::vector<std::int64_t> gaps;            ///< ascending
    std::vector<GapPresentation> presentation; ///< parallel to gaps
    /// successors[e] = indices f with gaps[e] strictly below gaps[f], ascending.
    std::vector<std::vector<std::uint32_t>> successors;
};

GapPoset build_gap_poset(const SemigroupPair& s);

/// Coefficients h_n for n in [base, base + values.size()).
template <class T>
struct CoefficientWindow {
    std::int64_t base = 0;
    std::vector<T> values;

    const T& at(std::int64_t n) const { return values[static_cast<std::size_t>(n - base)]; }
};

/// Couple index plus shift of an inequality picked out by a scan.
struct ScanHit {
    std::size_t couple = 0;
    std::int64_t n = 0;

    friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

/// Inclusive range of shifts n to scan.
struct ShiftRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};

namespace serial {

CoupleTable enumerate(const GapPoset& poset);

/// Chains of the poset including the empty one.
Integer count_chains(const GapPoset& poset);

/// First (couple, n) in (couple index, n ascending) order whose inequality
/// fails, or none.
template <class T>
std::optional<ScanHit> star_scan(const CoupleTable& table, const CoefficientWindow<T>& h, ShiftRange shifts);

/// All (couple, m) whose inequality is critical for generator step g and
/// holds with equality. With stop_at_first only the first such hit is
/// returned.
template <class T>
std::vector<ScanHit> nonstrict_critical(const CoupleTable& table, const CoefficientWindow<T>& h, std::int64_t g,
                                        ShiftRange shifts, bool stop_at_first);

} // namespace serial

namespace parallel {

CoupleTable enumerate(const GapPoset& poset);

template <class T>
std::optional<ScanHit> star_scan(const CoupleTable& table, const CoefficientWindow<T>& h, ShiftRange shifts);

template <class T>
std::vector<ScanHit> nonstrict_critical(const CoupleTable& table, const CoefficientWindow<T>& h, std::int64_t g,
                                        ShiftRange shifts, bool stop_at_first);

} // namespace parallel

/// True when m + i < 0 <= m + j for some i in I, j in J with both shifted
/// indices divisible by g.
bool is_critical(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs, std::int64_t m,
                 std::int64_t g);

/// Number of worker threads the parallel kernels will use.
int thread_count();

} // namespace hdepth::kernels
