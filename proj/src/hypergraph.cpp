#include "propb/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "propb/error.hpp"
#include "propb/exact.hpp"
#include "propb/random.hpp"
#include "propb/subsets.hpp"

namespace propb {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonUniformEdge: return "NonUniformEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InsufficientVertices: return "InsufficientVertices";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateBinomial: return "DegenerateBinomial";
    case ErrorKind::EqualityStructureViolated: return "EqualityStructureViolated";
    case ErrorKind::FixtureFailure: return "FixtureFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string describe(const Edge& e)
{
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

} // namespace

Hypergraph normalize(std::vector<Edge> raw_edges, std::size_t n, std::size_t p)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "uniformity must be positive");

    for (auto& e : raw_edges) {
        std::sort(e.begin(), e.end());
        if (e.size() != n)
            throw Error(ErrorKind::NonUniformEdge,
                        "edge " + describe(e) + " has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(n));
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorKind::NonUniformEdge, "edge " + describe(e) + " repeats a vertex");
        if (e.back() >= p)
            throw Error(ErrorKind::VertexOutOfRange,
                        "vertex " + std::to_string(e.back()) + " not below vertex count " + std::to_string(p));
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

    Hypergraph h;
    h.n_ = n;
    h.p_ = p;
    h.edges_ = std::move(raw_edges);
    h.use_masks_ = p <= kMaskBits;
    if (h.use_masks_) {
        h.masks_.reserve(h.edges_.size());
        for (const auto& e : h.edges_) {
            VertexMask m;
            for (Vertex v : e)
                m.set(v);
            h.masks_.push_back(m);
        }
    }
    h.incidence_.assign(p, {});
    for (EdgeIndex i = 0; i < h.edges_.size(); ++i)
        for (Vertex v : h.edges_[i])
            h.incidence_[v].push_back(i);
    return h;
}

std::size_t Hypergraph::intersection_size(EdgeIndex i, EdgeIndex j) const
{
    if (use_masks_)
        return (masks_[i] & masks_[j]).count();
    const auto& a = edges_[i];
    const auto& b = edges_[j];
    std::size_t count = 0;
    for (auto x = a.begin(), y = b.begin(); x != a.end() && y != b.end();) {
        if (*x < *y)
            ++x;
        else if (*y < *x)
            ++y;
        else {
            ++count;
            ++x;
            ++y;
        }
    }
    return count;
}

std::optional<Vertex> Hypergraph::meet(EdgeIndex i, EdgeIndex j) const
{
    if (i == j || intersection_size(i, j) != 1)
        return std::nullopt;
    const auto& a = edges_[i];
    const auto& b = edges_[j];
    for (auto x = a.begin(), y = b.begin(); x != a.end() && y != b.end();) {
        if (*x < *y)
            ++x;
        else if (*y < *x)
            ++y;
        else
            return *x;
    }
    return std::nullopt;
}

std::vector<Vertex> Hypergraph::covered_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p_; ++v)
        if (!incidence_[v].empty())
            out.push_back(v);
    return out;
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::span<const Vertex> sorted_vertices) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices, [](const Edge& e, auto key) {
        return std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end());
    });
    if (it != edges_.end() && std::equal(it->begin(), it->end(), sorted_vertices.begin(), sorted_vertices.end()))
        return static_cast<EdgeIndex>(it - edges_.begin());
    return std::nullopt;
}

std::vector<SimplePair> enumerate_simple_pairs(const Hypergraph& h)
{
    std::vector<SimplePair> pairs;
    const auto m = h.edge_count();
    for (EdgeIndex i = 0; i < m; ++i)
        for (EdgeIndex j = 0; j < m; ++j)
            if (auto y = h.meet(i, j))
                pairs.push_back({i, j, *y});
    return pairs;
}

std::uint64_t m2(const Hypergraph& h)
{
    // For each edge X, count how many vertices of X each other edge shares
    // via the incidence lists; an edge hit exactly once forms a simple pair.
    std::vector<std::uint32_t> hits(h.edge_count(), 0);
    std::vector<EdgeIndex> touched;
    std::uint64_t total = 0;
    for (EdgeIndex x = 0; x < h.edge_count(); ++x) {
        touched.clear();
        for (Vertex v : h.edge(x))
            for (EdgeIndex y : h.incident(v)) {
                if (y == x)
                    continue;
                if (hits[y]++ == 0)
                    touched.push_back(y);
            }
        for (EdgeIndex y : touched) {
            if (hits[y] == 1)
                ++total;
            hits[y] = 0;
        }
    }
    return total;
}


Hypergraph complete_hypergraph(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "uniformity must be positive");
    const std::size_t p = 2 * n - 1;
    std::vector<Vertex> all(p);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Edge> edges;
    for_each_subset<Vertex>(all, n, [&](const Edge& s) {
        edges.push_back(s);
        return true;
    });
    return normalize(std::move(edges), n, p);
}

Hypergraph pad(const Hypergraph& h, std::size_t extra_vertices, std::size_t extra_disjoint_edges)
{
    const auto n = h.uniformity();
    if (extra_vertices < n * extra_disjoint_edges)
        throw Error(ErrorKind::InsufficientVertices,
                    std::to_string(extra_disjoint_edges) + " disjoint edges need " +
                        std::to_string(n * extra_disjoint_edges) + " fresh vertices, got " +
                        std::to_string(extra_vertices));
    auto edges = h.edges();
    auto next = static_cast<Vertex>(h.vertex_count());
    for (std::size_t k = 0; k < extra_disjoint_edges; ++k) {
        Edge e(n);
        for (auto& v : e)
            v = next++;
        edges.push_back(std::move(e));
    }
    return normalize(std::move(edges), n, h.vertex_count() + extra_vertices);
}

bool seymour_check(const Hypergraph& h)
{
    return h.edge_count() >= h.covered_vertices().size();
}

namespace {

// Combination of rank r among the k-subsets of {0..p-1} in colex order.
Edge unrank_colex(std::uint64_t r, std::size_t p, std::size_t k)
{
    Edge out(k);
    std::uint64_t c = p;
    for (std::size_t i = k; i > 0; --i) {
        // largest c with C(c, i) <= r
        --c;
        while (static_cast<std::uint64_t>(binomial(c, i)) > r)
            --c;
        out[i - 1] = static_cast<Vertex>(c);
        r -= static_cast<std::uint64_t>(binomial(c, i));
    }
    return out;
}

} // namespace

Hypergraph random_hypergraph(std::size_t n, std::size_t p, std::size_t m, std::uint64_t seed)
{
    if (n == 0 || n > p)
        throw Error(ErrorKind::InvalidArgument, "need 1 <= n <= p");
    const BigInt total = binomial(p, n);
    if (BigInt(m) > total)
        throw Error(ErrorKind::TooManyEdges,
                    std::to_string(m) + " edges requested but only " + total.str() + " n-subsets exist");

    auto rng = stream_for(seed, 0);
    std::vector<Edge> edges;
    edges.reserve(m);
    if (total <= BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) {
        // Floyd's sampling of m distinct ranks.
        const auto space = static_cast<std::uint64_t>(total);
        std::set<std::uint64_t> ranks;
        for (std::uint64_t j = space - m; j < space; ++j) {
            const auto t = uniform_below(rng, j + 1);
            if (!ranks.insert(t).second)
                ranks.insert(j);
        }
        for (auto r : ranks)
            edges.push_back(unrank_colex(r, p, n));
    } else {
        std::set<Edge> chosen;
        std::vector<Vertex> pool(p);
        while (chosen.size() < m) {
            std::iota(pool.begin(), pool.end(), 0);
            // partial Fisher–Yates for the first n slots
            for (std::size_t i = 0; i < n; ++i)
                std::swap(pool[i], pool[i + uniform_below(rng, p - i)]);
            Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
            std::sort(e.begin(), e.end());
            chosen.insert(std::move(e));
        }
        edges.assign(chosen.begin(), chosen.end());
    }
    return normalize(std::move(edges), n, p);
}

Hypergraph fano_plane()
{
    std::vector<Edge> lines;
    for (Vertex i = 0; i < 7; ++i)
        lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return normalize(std::move(lines), 3, 7);
}

} // namespace propb
