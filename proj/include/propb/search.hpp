#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

/// One non-2-colorable instance examined by a search. For graphs (n = 2)
/// there is one record per isomorphism class; canonical_form lists the edges
/// of the canonical relabeling as "a,b;c,d;...".
struct SearchRecord {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t edge_count = 0;
    std::uint64_t m2 = 0;
    bool meets_bound = false;
    bool has_clique = false;
    bool seymour_ok = false;
    std::string canonical_form;

    auto operator<=>(const SearchRecord&) const = default;
};

struct Counterexample {
    SearchRecord record;
    std::string reason;
};

struct SearchSummary {
    std::size_t n = 0;
    std::uint64_t instances_tested = 0;
    std::uint64_t non_colorable = 0;
    std::optional<std::uint64_t> min_m2; // over non-colorable instances
    std::uint64_t equality_cases = 0;
    std::uint64_t equality_with_clique = 0;
    /// |E| < |covered V| among non-colorable instances. Recorded, not a
    /// counterexample: the inequality is only guaranteed for critical ones.
    std::uint64_t seymour_violations = 0;
    /// Violations of m2 >= bound or of equality ⟹ clique, and fast-path
    /// disagreements.
    std::vector<Counterexample> counterexamples;

    void merge(const SearchSummary& other);
};

struct SearchPass {
    std::size_t p = 0;
    SearchSummary summary;
    std::vector<SearchRecord> records; // sorted
};

struct SearchOptions {
    /// n = 2: test only one labeled representative per isomorphism class.
    bool isomorph_rejection = false;
    /// n = 2: re-derive each record through the general hypergraph routines
    /// (m2, exhaustive_decide, find_clique, seymour_check) and abort on any
    /// disagreement with the graph fast path.
    bool cross_check = false;
    /// n = 2: cap on the total number of labeled graphs enumerated.
    std::uint64_t budget = std::uint64_t{1} << 22;
    /// n >= 3: number of random hypergraphs drawn per p.
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t vertex_budget = 24;
    unsigned threads = 1;
};

struct SearchRun {
    std::vector<SearchPass> passes;
    SearchSummary total;
};

/// Canonical edge mask of a graph on p <= 11 vertices: the smallest
/// encoding over relabelings that list vertices by non-increasing degree.
/// Bit pair_index(i, j) is set for edge {i, j}, pairs in lexicographic order.
std::uint64_t canonical_graph_mask(std::uint64_t mask, std::size_t p);

/// All labeled graphs on exactly p vertices (n = 2). Non-bipartite graphs
/// are checked for m2 >= 6 and (m2 == 6 ⟹ triangle).
SearchPass verify_graphs(std::size_t p, const SearchOptions& options);

/// Random n-graphs on p vertices found non-colorable by the exhaustive
/// decider, checked for m2 >= bound(n) and equality ⟹ clique.
SearchPass verify_sampled(std::size_t n, std::size_t p, const SearchOptions& options);

/// n = 2: verify_graphs for p = 1..max_p, subject to the labeled-graph
/// budget (throws BudgetExceeded). n >= 3: verify_sampled for
/// p = 2n-1..max_p. `skip` lets callers resume by omitting completed p;
/// `on_pass` observes each finished pass in order.
SearchRun verify_bound_exhaustive(std::size_t n, std::size_t max_p, const SearchOptions& options,
                                  const std::function<bool(std::size_t)>& skip = {},
                                  const std::function<void(const SearchPass&)>& on_pass = {});

struct FixtureResult {
    std::string name;
    std::size_t p = 0;
    std::size_t edge_count = 0;
    bool non_colorable = false;
    std::uint64_t m2 = 0;
    bool meets_bound = false;
    bool seymour_ok = false;
    bool critical_seymour_ok = false;
    std::optional<std::vector<Vertex>> clique;
    /// Only filled for equality cases.
    bool conditions_ok = false;
    bool sum_is_one = false;
    bool equality_structure = false;
};

struct FixtureReport {
    std::size_t n = 0;
    std::vector<FixtureResult> fixtures;
};

/// Full pipeline on the built-in fixtures for n in {2, 3, 4}: the complete
/// hypergraph, padded copies, the Fano plane (n = 3), and random
/// non-colorable instances. Throws FixtureFailure naming the fixture and
/// the failed assertion.
FixtureReport verify_fixture_suite(std::size_t n, std::uint64_t seed = 1);

/// "a,b;c,d" rendering of an edge list.
std::string encode_edges(const std::vector<Edge>& edges);

} // namespace propb
