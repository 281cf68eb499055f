#pragma once

// Pieces shared by the serial and parallel kernels. Only the loop
// orchestration differs between the two translation units.

#include "hdepth/kernels.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hdepth::kernels::detail {

/// Depth-first walk over chains starting at `start`, emitting each chain's
/// couple in preorder (lexicographic by I since successors are ascending).
class ChainWalker {
public:
    ChainWalker(const GapPoset& poset, CoupleTable& out) : poset_(poset), out_(out) {}

    void walk_from(std::uint32_t start)
    {
        chain_.clear();
        chain_.push_back(start);
        descend();
    }

private:
    void descend()
    {
        emit();
        const auto& next = poset_.successors[chain_.back()];
        for (std::uint32_t f : next) {
            chain_.push_back(f);
            descend();
            chain_.pop_back();
        }
    }

    void emit()
    {
        const std::int64_t alpha = poset_.alpha, beta = poset_.beta, ab = alpha * beta;
        const std::size_t m = chain_.size();
        lhs_.assign(1, 0);
        rhs_.clear();
        for (auto idx : chain_)
            lhs_.push_back(poset_.gaps[idx]);
        const auto& first = poset_.presentation[chain_.front()];
        rhs_.push_back((beta - first.a) * alpha);
        for (std::size_t k = 0; k + 1 < m; ++k) {
            const auto& cur = poset_.presentation[chain_[k]];
            const auto& nxt = poset_.presentation[chain_[k + 1]];
            rhs_.push_back(ab - nxt.a * alpha - cur.b * beta);
        }
        rhs_.push_back((alpha - poset_.presentation[chain_.back()].b) * beta);
        out_.push(lhs_, rhs_);
    }

    const GapPoset& poset_;
    CoupleTable& out_;
    std::vector<std::uint32_t> chain_;
    std::vector<std::int64_t> lhs_;
    std::vector<std::int64_t> rhs_;
};

/// Fills slack[n - lo] = sum_J h_{n+j} - sum_I h_{n+i} for n in the range.
template <class T>
void inequality_slack(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs,
                      const CoefficientWindow<T>& h, ShiftRange shifts, std::vector<T>& slack)
{
    const std::size_t len = static_cast<std::size_t>(shifts.hi - shifts.lo + 1);
    slack.assign(len, T(0));
    for (std::int64_t j : rhs) {
        const T* src = &h.at(shifts.lo + j);
        for (std::size_t k = 0; k < len; ++k)
            slack[k] += src[k];
    }
    for (std::int64_t i : lhs) {
        const T* src = &h.at(shifts.lo + i);
        for (std::size_t k = 0; k < len; ++k)
            slack[k] -= src[k];
    }
}

template <class T>
std::optional<std::int64_t> first_negative(const std::vector<T>& slack, std::int64_t lo)
{
    for (std::size_t k = 0; k < slack.size(); ++k)
        if (slack[k] < 0)
            return lo + static_cast<std::int64_t>(k);
    return std::nullopt;
}

/// Shifts m (ascending) where the couple is g-critical and tight.
template <class T>
void tight_critical_shifts(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs,
                           const CoefficientWindow<T>& h, std::int64_t g, ShiftRange shifts,
                           std::vector<T>& slack, std::vector<std::int64_t>& out, bool stop_at_first)
{
    out.clear();
    inequality_slack(lhs, rhs, h, shifts, slack);
    for (std::int64_t m = shifts.lo; m <= shifts.hi; ++m) {
        if (slack[static_cast<std::size_t>(m - shifts.lo)] != 0)
            continue;
        if (!is_critical(lhs, rhs, m, g))
            continue;
        out.push_back(m);
        if (stop_at_first)
            return;
    }
}

} // namespace hdepth::kernels::detail
