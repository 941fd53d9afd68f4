#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace propb {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Edge = std::vector<Vertex>;

// Edges get a fixed-width mask when every vertex id fits; wider hypergraphs
// fall back to sorted-list intersection.
inline constexpr std::size_t kMaskBits = 128;
using VertexMask = std::bitset<kMaskBits>;

/// Ordered pair of distinct edges (first, second) whose intersection is
/// exactly {meet}.
struct SimplePair {
    EdgeIndex first = 0;
    EdgeIndex second = 0;
    Vertex meet = 0;

    auto operator<=>(const SimplePair&) const = default;
};

/// An n-uniform hypergraph on vertices 0..p-1. Instances are only built by
/// normalize() (and the generators that call it), so edges are always valid,
/// distinct, internally sorted and listed in lexicographic order. Immutable.
class Hypergraph {
public:
    Hypergraph() = default;

    std::size_t uniformity() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return p_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> edge(EdgeIndex i) const { return edges_[i]; }

    bool has_masks() const noexcept { return use_masks_; }
    const VertexMask& mask(EdgeIndex i) const { return masks_[i]; }

    /// Edge indices containing v, ascending.
    std::span<const EdgeIndex> incident(Vertex v) const { return incidence_[v]; }
    std::size_t degree(Vertex v) const { return incidence_[v].size(); }

    std::size_t intersection_size(EdgeIndex i, EdgeIndex j) const;

    /// The shared vertex when |X ∩ Y| == 1.
    std::optional<Vertex> meet(EdgeIndex i, EdgeIndex j) const;

    /// Vertices lying in at least one edge, ascending.
    std::vector<Vertex> covered_vertices() const;

    /// Index of the edge equal to `sorted_vertices`, if present.
    std::optional<EdgeIndex> find_edge(std::span<const Vertex> sorted_vertices) const;

    bool operator==(const Hypergraph& other) const
    {
        return n_ == other.n_ && p_ == other.p_ && edges_ == other.edges_;
    }

private:
    friend Hypergraph normalize(std::vector<Edge> raw_edges, std::size_t n, std::size_t p);

    std::size_t n_ = 1;
    std::size_t p_ = 0;
    std::vector<Edge> edges_;
    bool use_masks_ = true;
    std::vector<VertexMask> masks_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Validates, deduplicates and canonically orders raw edges.
/// Throws NonUniformEdge, VertexOutOfRange, or InvalidArgument for n == 0.
Hypergraph normalize(std::vector<Edge> raw_edges, std::size_t n, std::size_t p);

/// All ordered simple pairs, sorted by (first, second). Both (i, j) and
/// (j, i) are listed, so the result has m2(H) entries.
std::vector<SimplePair> enumerate_simple_pairs(const Hypergraph& h);

/// Number of ordered simple pairs without materializing them. Always even.
std::uint64_t m2(const Hypergraph& h);

/// K^n_{2n-1}: every n-subset of 2n-1 vertices.
Hypergraph complete_hypergraph(std::size_t n);

/// Appends `extra_vertices` fresh vertices and `extra_disjoint_edges`
/// pairwise-disjoint edges on them. The simple-pair count is unchanged.
Hypergraph pad(const Hypergraph& h, std::size_t extra_vertices, std::size_t extra_disjoint_edges);

/// |E| >= number of covered vertices. Seymour's theorem guarantees this for
/// minimally non-2-colorable hypergraphs only; a non-colorable hypergraph
/// with extra sparse components can fail it (see critical_seymour_check).
bool seymour_check(const Hypergraph& h);

/// m distinct uniformly random n-subsets of [0, p), reproducible from seed.
Hypergraph random_hypergraph(std::size_t n, std::size_t p, std::size_t m, std::uint64_t seed);

/// The Fano plane on vertices 0..6 with lines {i, i+1, i+3} mod 7.
Hypergraph fano_plane();

} // namespace propb
