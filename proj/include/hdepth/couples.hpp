#pragma once

#include "hdepth/laurent.hpp"
#include "hdepth/semigroup.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace hdepth {

/// Index sequences [I, J] generating one family of inequalities
/// sum_{i in I} h_{n+i} <= sum_{j in J} h_{n+j}. I starts with 0 and the
/// remaining entries form a strictly increasing chain of gaps.
struct FundamentalCouple {
    std::vector<std::int64_t> lhs; ///< I
    std::vector<std::int64_t> rhs; ///< J

    std::size_t length() const noexcept { return lhs.size(); }

    friend bool operator==(const FundamentalCouple&, const FundamentalCouple&) = default;
    friend auto operator<=>(const FundamentalCouple&, const FundamentalCouple&) = default;
};

/// Couple satisfying only the congruence/ordering conditions; entries may
/// be any integers and may repeat.
struct BalancedCouple {
    std::vector<std::int64_t> lhs;
    std::vector<std::int64_t> rhs;

    friend bool operator==(const BalancedCouple&, const BalancedCouple&) = default;
};

/// Flat, append-only storage of many couples; what the scan kernels read.
class CoupleTable {
public:
    std::size_t size() const noexcept { return offsets_.size() - 1; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const std::int64_t> lhs(std::size_t k) const
    {
        return {lhs_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
    }
    std::span<const std::int64_t> rhs(std::size_t k) const
    {
        return {rhs_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
    }
    std::size_t max_length() const noexcept { return max_length_; }

    FundamentalCouple couple(std::size_t k) const;

    void push(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs);
    void append(const CoupleTable& other);
    void reserve(std::size_t couples, std::size_t entries);

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<std::int64_t> lhs_;
    std::vector<std::int64_t> rhs_;
    std::size_t max_length_ = 0;
};

/// Completes a strictly increasing gap chain to its unique couple.
/// Throws InputError("NotAGap") or InputError("NotAChain").
FundamentalCouple couple_from_chain(const SemigroupPair& s, std::span<const std::int64_t> chain);

/// All fundamental couples, lexicographic by I (the empty chain first).
std::vector<FundamentalCouple> enumerate_couples(const SemigroupPair& s);

/// Same set, flat; shared and cached per pair.
std::shared_ptr<const CoupleTable> couple_table(const SemigroupPair& s);

/// Streams couples in the same order without materializing them. The
/// callback returns false to stop early.
void for_each_couple(const SemigroupPair& s, const std::function<bool(const FundamentalCouple&)>& visit);

/// Number of couples (chains in the gap poset, counting the empty chain),
/// by dynamic programming over the poset.
Integer count_couples(const SemigroupPair& s);

/// Literal check of the four defining conditions; malformed input -> false.
bool is_fundamental(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs);

bool is_balanced(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs);

/// Balanced, strict, and every connector within alpha*beta of a neighbour.
bool is_reduced(const SemigroupPair& s, std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs);

/// For each k, the smallest x with x = i_k (mod alpha), x = i_{k+1} (mod beta)
/// and x >= i_k, i_{k+1} (indices cyclic). For a reduced balanced couple this
/// is its J.
std::vector<std::int64_t> minimal_connectors(const SemigroupPair& s, std::span<const std::int64_t> lhs);

BalancedCouple shift_couple(const BalancedCouple& c, std::int64_t x);

/// Random balanced couple of length in [1, max_length]; each j_k is the
/// minimal connector plus a random multiple of alpha*beta in
/// [0, slack_bound]. Deterministic per seed.
BalancedCouple random_balanced(const SemigroupPair& s, std::uint64_t seed, std::size_t max_length,
                               std::int64_t slack_bound);

} // namespace hdepth
