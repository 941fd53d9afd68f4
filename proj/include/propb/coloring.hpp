#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

/// Bijection from vertices to positions. Positions are 0-based internally
/// (position 0 is processed first); reports print them as given.
class Ordering {
public:
    /// Vertices in processing order. Throws InvalidOrdering unless the
    /// sequence is a permutation of 0..p-1.
    static Ordering from_sequence(std::vector<Vertex> sequence, std::size_t p);

    static Ordering identity(std::size_t p);

    std::size_t size() const noexcept { return sequence_.size(); }
    std::size_t rank(Vertex v) const { return rank_[v]; }
    Vertex at(std::size_t position) const { return sequence_[position]; }
    std::span<const Vertex> sequence() const noexcept { return sequence_; }

    bool operator==(const Ordering&) const = default;

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> rank_;
};

/// Uniform random ordering of 0..p-1 by Fisher–Yates.
Ordering random_ordering(std::size_t p, std::mt19937_64& rng);

enum class Color : std::uint8_t { Blue, Red };

struct Coloring {
    std::vector<Color> colors;
    bool proper = true;
    std::optional<EdgeIndex> violating_edge;
};

struct ColoringOutcome {
    Coloring coloring;
    /// Present whenever the coloring is improper and n >= 2: a simple pair
    /// separated by the ordering that was used.
    std::optional<SimplePair> separated_witness;
};

/// Greedy order-driven coloring: each vertex, in order, becomes Blue unless
/// that would complete an all-Blue edge, in which case it becomes Red.
ColoringOutcome pluhar_color(const Hypergraph& h, const Ordering& order);

/// First monochromatic edge in canonical order, if any.
/// Throws IncompleteColoring when `colors` does not cover every vertex.
std::optional<EdgeIndex> is_proper(const Hypergraph& h, std::span<const Color> colors);

enum class Colorability { Yes, No, Undetermined };

struct Decision {
    Colorability verdict = Colorability::Undetermined;
    std::optional<std::vector<Color>> coloring;
};

inline constexpr std::size_t kDefaultVertexBudget = 24;

/// Exact 2-colorability by exhausting 2^(c-1) colorings of the c covered
/// vertices. Returns Undetermined when c exceeds the budget (capped at 63).
Decision exhaustive_decide(const Hypergraph& h, std::size_t vertex_budget = kDefaultVertexBudget);

/// A minimal non-2-colorable sub-hypergraph (every proper subset of its
/// edges is 2-colorable), found by deleting edges greedily in canonical
/// order. Vertex ids are kept. nullopt when h is colorable or the decider
/// exceeds the budget.
std::optional<Hypergraph> critical_subhypergraph(const Hypergraph& h,
                                                 std::size_t vertex_budget = kDefaultVertexBudget);

/// Seymour's inequality |E| >= |covered V| on a critical sub-hypergraph,
/// where it is a theorem. nullopt when no critical core could be found.
std::optional<bool> critical_seymour_check(const Hypergraph& h, std::size_t vertex_budget = kDefaultVertexBudget);

struct RestartResult {
    std::uint64_t trial = 0;
    Ordering ordering;
    Coloring coloring;
};

/// Runs pluhar_color on random orderings until one yields a proper coloring.
/// Trial t uses the stream derived from (seed, t); the lowest successful trial
/// is returned regardless of thread count.
std::optional<RestartResult> random_restart_color(const Hypergraph& h, std::uint64_t max_trials,
                                                  std::uint64_t seed, unsigned threads = 1);

} // namespace propb
