#pragma once

#include "hdepth/laurent.hpp"
#include "hdepth/semigroup.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace hdepth {

enum class Generator { alpha, beta };

/// Subset of {alpha, beta}: which factors (1 - t^alpha), (1 - t^beta)
/// divide an atom.
struct DenomSet {
    bool alpha = false;
    bool beta = false;

    static constexpr DenomSet none() { return {false, false}; }
    static constexpr DenomSet only_alpha() { return {true, false}; }
    static constexpr DenomSet only_beta() { return {false, true}; }
    static constexpr DenomSet both() { return {true, true}; }
    static constexpr DenomSet of(Generator g) { return g == Generator::alpha ? only_alpha() : only_beta(); }

    constexpr int size() const { return int(alpha) + int(beta); }
    constexpr bool empty() const { return !alpha && !beta; }

    friend constexpr auto operator<=>(const DenomSet&, const DenomSet&) = default;
};

/// One summand coeff * t^shift / prod_{g in denom} (1 - t^g).
struct Term {
    std::int64_t shift = 0;
    Integer coeff = 1;
    DenomSet denom;

    friend bool operator==(const Term&, const Term&) = default;
};

using TermList = std::vector<Term>;

/// Merges equal (shift, denom) entries, drops zero coefficients and sorts
/// by (denom, shift).
TermList normalize_terms(TermList terms);

/// num / prod (1 - t^d) over the declared factors, with weights
/// alpha <= beta. Weights need not be coprime so that non-coprime gradings
/// can be carried to the Veronese reduction; analysis entry points call
/// pair() and reject them.
class RationalSeries {
public:
    RationalSeries(std::int64_t alpha, std::int64_t beta, LaurentPoly num, bool den_alpha, bool den_beta);
    RationalSeries(const SemigroupPair& s, LaurentPoly num, bool den_alpha, bool den_beta)
        : RationalSeries(s.alpha(), s.beta(), std::move(num), den_alpha, den_beta) {}

    static RationalSeries zero(std::int64_t alpha, std::int64_t beta);
    static RationalSeries zero(const SemigroupPair& s) { return zero(s.alpha(), s.beta()); }

    std::int64_t alpha() const noexcept { return alpha_; }
    std::int64_t beta() const noexcept { return beta_; }
    const LaurentPoly& numerator() const noexcept { return num_; }
    bool den_alpha() const noexcept { return den_alpha_; }
    bool den_beta() const noexcept { return den_beta_; }
    int den_count() const noexcept { return int(den_alpha_) + int(den_beta_); }

    /// Throws NonCoprime / EqualWeights for gradings outside the coprime case.
    SemigroupPair pair() const { return SemigroupPair::from_weights(alpha_, beta_); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    /// Lowest exponent of the numerator (L0); equals the lowest nonzero
    /// coefficient index whenever the series is nonnegative.
    std::int64_t low() const { return num_.min_exponent(); }
    /// Highest exponent of the numerator (D).
    std::int64_t high() const { return num_.max_exponent(); }

    /// Numerator over the full denominator (1 - t^alpha)(1 - t^beta).
    LaurentPoly canonical_numerator() const;
    /// Same series over the full denominator.
    RationalSeries with_full_denominator() const;
    /// Cancels denominator factors that divide the numerator.
    RationalSeries simplified() const;

    /// Equal as formal series (same weights, same canonical numerator).
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);

private:
    std::int64_t alpha_;
    std::int64_t beta_;
    LaurentPoly num_;
    bool den_alpha_;
    bool den_beta_;
};

RationalSeries to_rational(std::int64_t alpha, std::int64_t beta, const TermList& terms);
inline RationalSeries to_rational(const SemigroupPair& s, const TermList& terms)
{
    return to_rational(s.alpha(), s.beta(), terms);
}

/// Exact coefficients h_from..h_to (inclusive). Throws InputError if from > to.
std::vector<Integer> coeffs(const RationalSeries& h, std::int64_t from, std::int64_t to);
Integer coefficient(const RationalSeries& h, std::int64_t n);

/// max(0, D) + alpha*beta: past this index every coefficient identity used
/// by the window arguments applies.
std::int64_t stabilization_index(const RationalSeries& h);

/// Exact. Non-coprime weights are decided slice by slice.
bool is_nonnegative(const RationalSeries& h);

/// Pole order at t = 1 (0, 1 or 2).
int dimension(const RationalSeries& h);

/// Stable window sum over alpha*beta consecutive coefficients.
/// Throws InputError("DimensionTooHigh") when dimension(h) == 2.
Integer sigma(const RationalSeries& h);

/// min { h_{r g} : r > 0 } for g the chosen generator.
Integer c_min(const RationalSeries& h, Generator g);

/// Slice k of a series over weights (alpha*delta, beta*delta): its n-th
/// coefficient is h_{n*delta + k}. Throws InputError("BadResidue").
RationalSeries veronese(const RationalSeries& h, std::int64_t delta, std::int64_t k);

RationalSeries add(const RationalSeries& a, const RationalSeries& b);
RationalSeries shift(const RationalSeries& h, std::int64_t s);
/// h - t^s / prod_{g in denom} (1 - t^g)
RationalSeries subtract_atom(const RationalSeries& h, std::int64_t s, DenomSet denom);
/// (1 - t^d)^r * h
RationalSeries multiply_one_minus(const RationalSeries& h, std::int64_t d, int r = 1);

} // namespace hdepth
