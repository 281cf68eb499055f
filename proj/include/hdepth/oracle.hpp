#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// enumeration, scan or greedy code it is used to check.

#include "hdepth/semigroup.hpp"
#include "hdepth/series.hpp"

#include <cstdint>
#include <vector>

namespace hdepth::oracle {

/// Triple loop over (p, a, b). Throws InvariantBroken unless exactly one
/// presentation is found, InputError("NonPositive") for n <= 0.
GapPresentation brute_present(const SemigroupPair& s, std::int64_t n);

/// Subsets of gaps with pairwise gap differences, plus one for the empty
/// set. Throws InputError("TooLarge") when alpha*beta > 200.
std::uint64_t brute_count_couples(const SemigroupPair& s);

enum class SearchResult { decomposable, not_decomposable, budget_exceeded };

const char* to_string(SearchResult r);

struct SearchBudget {
    /// Maximum number of greedy levels; 0 means sigma(H) + 1.
    std::int64_t depth = 0;
    std::uint64_t nodes = 2'000'000;
};

/// Exhaustive search for a decomposition into atoms with exactly one
/// denominator factor. At the lowest support index with coefficient c it
/// tries every split into k alpha-atoms and c - k beta-atoms.
/// Throws InputError for dimension-2 or negative input.
SearchResult brute_decomposable_dim1(const RationalSeries& h, SearchBudget budget = {});

/// Random nonnegative combination of shifted atoms of all three kinds.
RationalSeries random_star_series(const SemigroupPair& s, std::uint64_t seed, int n_atoms,
                                  std::int64_t shift_bound);

struct CorpusEntry {
    TermList recipe;
    RationalSeries series;
};

struct Corpus {
    std::uint64_t seed = 0;
    std::vector<CorpusEntry> members;
};

/// `count` members, each built from 1..max_atoms random atoms.
Corpus make_corpus(const SemigroupPair& s, std::uint64_t seed, std::size_t count, int max_atoms,
                   std::int64_t shift_bound);

struct FixedInequality {
    int label = 0;
    std::vector<std::int64_t> lhs;
    std::vector<std::int64_t> rhs;
};

/// The seven published inequalities for (3, 5), labelled 6..12. Label 11
/// uses the right-hand side {5, 6, 7}; the variant {4, 5, 6} is not valid.
std::vector<FixedInequality> regression_vectors_3_5();

} // namespace hdepth::oracle
