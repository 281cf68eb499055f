#pragma once

#include "hdepth/errors.hpp"
#include "hdepth/series.hpp"
#include "hdepth/star.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdepth {

enum class Provenance {
    exact_module_input,  ///< input term list already had no finite-length terms
    dim1_greedy,         ///< greedy atom subtraction, possibly after peeling the free part
    tail_peel_heuristic, ///< raw dimension-2 input; free part guessed at a high shift
    free_numerator,      ///< canonical numerator is nonnegative
};

const char* to_string(Provenance p);

/// A form-(1) sum with every term carrying at least one denominator factor.
struct Decomposition {
    TermList atoms;
    Provenance provenance = Provenance::dim1_greedy;
};

struct DepthReport {
    int hdep = 0;
    StarVerdict verdict;
    std::optional<Decomposition> witness;
    std::optional<std::string> caveat;
    /// Depth per Veronese slice when the weights share a factor; empty otherwise.
    std::vector<int> slice_depths;
};

/// Thrown by the decomposers when the input violates the couple inequalities.
class StarFails : public InputError {
public:
    explicit StarFails(Violation v)
        : InputError("StarFails", "series violates the couple inequalities"), violation_(std::move(v)) {}
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Raw dimension-2 input for which the tail-peel search found no witness.
class NotFound : public InputError {
public:
    NotFound() : InputError("NotFound", "no decomposition found for this raw series") {}
};

/// Largest r with (1 - t^d)^r h nonnegative; none when h = 0 (unbounded).
/// Throws NotNonnegative.
std::optional<int> pd(const RationalSeries& h, std::int64_t d);

DepthReport hilbert_depth(const RationalSeries& h);
DepthReport hilbert_depth(const SemigroupPair& s, const TermList& terms);

struct GreedyOptions {
    /// Re-check nonnegativity, the couple inequalities and the sigma drop
    /// after every step (slow; for tests).
    bool verify_steps = false;
};

/// Greedy decomposition of a series of dimension <= 1 into atoms with one
/// denominator factor. Throws StarFails, NotNonnegative, DimensionTooHigh, or
/// InvariantBroken if neither subtraction is legal.
Decomposition decompose_dim1(const RationalSeries& h, const GreedyOptions& options = {});

Decomposition decompose(const RationalSeries& h);
Decomposition decompose(const SemigroupPair& s, const TermList& terms);

/// Exact re-sum matches h and no term is of finite length.
bool verify_decomposition(const RationalSeries& h, const Decomposition& d);

/// Direct-sum description of a module whose Hilbert series is the witness.
std::string witness_module(const Decomposition& d);

int nu(const RationalSeries& h);
int nu(const SemigroupPair& s, const TermList& terms);

} // namespace hdepth
