#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "propb/coloring.hpp"
#include "propb/exact.hpp"
#include "propb/hypergraph.hpp"

namespace propb {

/// True iff every vertex of X\{y} precedes y and y precedes every vertex of
/// Y\{y}, where {y} = X ∩ Y. Both edges must be sorted.
/// Throws NotSimple when |X ∩ Y| != 1.
bool separates(const Ordering& order, std::span<const Vertex> x, std::span<const Vertex> y);

/// Same predicate on a pair already known to be simple.
bool separates(const Hypergraph& h, const Ordering& order, const SimplePair& pair);

/// Number of ordered simple pairs of h separated by `order`.
std::uint64_t count_separated(const Hypergraph& h, const Ordering& order);

/// As above, reusing a precomputed enumerate_simple_pairs(h).
std::uint64_t count_separated(const Hypergraph& h, std::span<const SimplePair> pairs, const Ordering& order);

/// ((n-1)!)^2 / (2n-1)!, which equals 1 / bound(n).
Rational exact_separation_probability(std::uint64_t n);

inline constexpr std::size_t kSeparationUnionBudget = 10;

/// Fraction of the |X ∪ Y|! orderings of X ∪ Y that separate (X, Y).
/// Throws NotSimple, or BudgetExceeded when |X ∪ Y| > union_budget.
Rational enumerate_separation_probability(std::span<const Vertex> x, std::span<const Vertex> y,
                                          std::size_t union_budget = kSeparationUnionBudget);

inline constexpr std::size_t kEnumerationVertexBudget = 8;

/// Exact mean of count_separated over all p! orderings.
/// Throws BudgetExceeded when p > vertex_budget.
Rational exact_mean_separated(const Hypergraph& h, std::size_t vertex_budget = kEnumerationVertexBudget,
                              unsigned threads = 1);

struct SeparationStats {
    std::uint64_t trials = 0;
    std::map<std::uint64_t, std::uint64_t> histogram; // separated count -> frequency
    Rational mean_separated;                          // sum k*freq(k) / trials
    double mean = 0.0;
    double variance = 0.0;       // unbiased sample variance
    double standard_error = 0.0; // sqrt(variance / trials)
    double success_rate = 0.0;   // freq(0) / trials
};

/// Samples `trials` uniform orderings; trial t uses the stream derived from
/// (seed, t), so the result does not depend on the thread count.
SeparationStats monte_carlo_separation(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads = 1);

} // namespace propb
