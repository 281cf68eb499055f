#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hdepth {

/// The unique writing n = p*alpha*beta - a*alpha - b*beta with p > 0,
/// 0 <= a < beta and 0 <= b < alpha.
struct GapPresentation {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const GapPresentation&, const GapPresentation&) = default;
};

/// Coprime generator pair of the numerical semigroup <alpha, beta>.
///
/// Always stored with alpha < beta (or alpha = beta = 1). All members are
/// pure and the object is immutable, so it can be shared freely across
/// threads.
class SemigroupPair {
public:
    /// Orders and validates two weights. Throws NonCoprime or EqualWeights.
    static SemigroupPair from_weights(std::int64_t d1, std::int64_t d2);

    std::int64_t alpha() const noexcept { return alpha_; }
    std::int64_t beta() const noexcept { return beta_; }
    std::int64_t product() const noexcept { return alpha_ * beta_; }

    /// (alpha-1)(beta-1): every integer from here on is a member.
    std::int64_t conductor() const noexcept { return (alpha_ - 1) * (beta_ - 1); }
    std::int64_t genus() const noexcept { return conductor() / 2; }

    bool is_member(std::int64_t n) const noexcept;
    bool is_gap(std::int64_t n) const noexcept { return n > 0 && !is_member(n); }

    /// Gaps in ascending order.
    std::vector<std::int64_t> gaps() const;

    /// Closed-form presentation; throws InputError("NonPositive") for n <= 0.
    GapPresentation present(std::int64_t n) const;

    /// Apery set of g in S for g in {alpha, beta}, ascending.
    /// Throws InputError("BadModulus") otherwise.
    std::vector<std::int64_t> apery(std::int64_t g) const;

    friend bool operator==(const SemigroupPair&, const SemigroupPair&) = default;

private:
    SemigroupPair(std::int64_t alpha, std::int64_t beta, std::int64_t beta_inv_mod_alpha)
        : alpha_(alpha), beta_(beta), beta_inv_mod_alpha_(beta_inv_mod_alpha) {}

    std::int64_t alpha_;
    std::int64_t beta_;
    std::int64_t beta_inv_mod_alpha_;
};

/// Relation of e1 to e2 under the gap order: e1 <= e2 iff a(e1) >= a(e2)
/// and b(e1) <= b(e2). `strict` means both coordinate inequalities are
/// strict, which is stronger than "<= and different".
enum class GapOrder { strict, weak_only, equal, incomparable };

/// Classifies whether e1 precedes e2. A pair with e2 <= e1 only is
/// reported as incomparable from e1's side. Throws InputError("NotAGap").
GapOrder gap_order(const SemigroupPair& s, std::int64_t e1, std::int64_t e2);

/// The unique gap j >= e1, e2 with j = e1 (mod alpha), j = e2 (mod beta),
/// present exactly when e1 <= e2 in the gap order.
std::optional<std::int64_t> connecting_gap(const SemigroupPair& s, std::int64_t e1, std::int64_t e2);

/// |e1 - e2| is a gap, decided from presentations only.
bool diff_is_gap(const SemigroupPair& s, std::int64_t e1, std::int64_t e2);

/// Floor-mod for possibly negative values.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) noexcept
{
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) noexcept
{
    return (x - floor_mod(x, m)) / m;
}

} // namespace hdepth
