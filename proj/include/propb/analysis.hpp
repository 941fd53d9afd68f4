#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "propb/coloring.hpp"
#include "propb/exact.hpp"
#include "propb/hypergraph.hpp"
#include "propb/setpairs.hpp"

namespace propb {

struct AnalysisReport {
    std::uint64_t m2 = 0;
    BigInt bound;
    bool meets_bound_exactly = false;
    bool seymour_ok = false;
    /// Seymour's inequality on a critical core; set only when non-colorable.
    std::optional<bool> critical_seymour_ok;
    Colorability colorable = Colorability::Undetermined;
    std::optional<std::vector<Color>> proper_coloring;
    /// Set only when the hypergraph is non-colorable with m2 == bound.
    std::optional<std::vector<Vertex>> clique_witness;
    BollobasVerdict bollobas;
    std::size_t selection_size = 0; // |M(H)|
};

AnalysisReport analyze(const Hypergraph& h, std::size_t vertex_budget = kDefaultVertexBudget);

} // namespace propb
