#include "propb/coloring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "propb/error.hpp"
#include "propb/parallel.hpp"
#include "propb/random.hpp"

namespace propb {

Ordering Ordering::from_sequence(std::vector<Vertex> sequence, std::size_t p)
{
    if (sequence.size() != p)
        throw Error(ErrorKind::InvalidOrdering,
                    "ordering lists " + std::to_string(sequence.size()) + " vertices, expected " + std::to_string(p));
    Ordering o;
    o.rank_.assign(p, std::numeric_limits<std::size_t>::max());
    for (std::size_t pos = 0; pos < p; ++pos) {
        const Vertex v = sequence[pos];
        if (v >= p)
            throw Error(ErrorKind::InvalidOrdering, "vertex " + std::to_string(v) + " out of range");
        if (o.rank_[v] != std::numeric_limits<std::size_t>::max())
            throw Error(ErrorKind::InvalidOrdering, "vertex " + std::to_string(v) + " listed twice");
        o.rank_[v] = pos;
    }
    o.sequence_ = std::move(sequence);
    return o;
}

Ordering Ordering::identity(std::size_t p)
{
    std::vector<Vertex> seq(p);
    std::iota(seq.begin(), seq.end(), 0);
    return from_sequence(std::move(seq), p);
}

Ordering random_ordering(std::size_t p, std::mt19937_64& rng)
{
    std::vector<Vertex> seq(p);
    std::iota(seq.begin(), seq.end(), 0);
    fisher_yates(std::span<Vertex>(seq), rng);
    return Ordering::from_sequence(std::move(seq), p);
}

std::optional<EdgeIndex> is_proper(const Hypergraph& h, std::span<const Color> colors)
{
    if (colors.size() != h.vertex_count())
        throw Error(ErrorKind::IncompleteColoring, "coloring assigns " + std::to_string(colors.size()) +
                                                       " vertices, hypergraph has " +
                                                       std::to_string(h.vertex_count()));
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        const auto e = h.edge(i);
        const Color first = colors[e.front()];
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == first; }))
            return i;
    }
    return std::nullopt;
}

namespace {

// The Red edge Y was produced because its earliest vertex y was forced Red
// by an edge X whose other vertices were already Blue; (X, Y) is then a
// simple pair separated by the ordering.
std::optional<SimplePair> extract_witness(const Hypergraph& h, const Ordering& order,
                                          std::span<const Color> colors, EdgeIndex red_edge)
{
    const auto y_edge = h.edge(red_edge);
    const Vertex y = *std::min_element(y_edge.begin(), y_edge.end(),
                                       [&](Vertex a, Vertex b) { return order.rank(a) < order.rank(b); });
    for (EdgeIndex x : h.incident(y)) {
        if (x == red_edge)
            continue;
        const auto x_edge = h.edge(x);
        const bool forcing = std::all_of(x_edge.begin(), x_edge.end(), [&](Vertex v) {
            return v == y || (colors[v] == Color::Blue && order.rank(v) < order.rank(y));
        });
        if (forcing)
            return SimplePair{x, red_edge, y};
    }
    return std::nullopt;
}

} // namespace

ColoringOutcome pluhar_color(const Hypergraph& h, const Ordering& order)
{
    if (order.size() != h.vertex_count())
        throw Error(ErrorKind::InvalidOrdering, "ordering size " + std::to_string(order.size()) +
                                                    " does not match vertex count " +
                                                    std::to_string(h.vertex_count()));
    const std::size_t n = h.uniformity();
    std::vector<std::size_t> blue_in_edge(h.edge_count(), 0);
    ColoringOutcome out;
    auto& colors = out.coloring.colors;
    colors.assign(h.vertex_count(), Color::Blue);

    for (Vertex v : order.sequence()) {
        const auto inc = h.incident(v);
        // v is processed after every vertex counted in blue_in_edge, so n-1
        // Blue vertices means the rest of the edge is already all Blue.
        const bool completes_blue =
            std::any_of(inc.begin(), inc.end(), [&](EdgeIndex e) { return blue_in_edge[e] == n - 1; });
        if (completes_blue) {
            colors[v] = Color::Red;
        } else {
            colors[v] = Color::Blue;
            for (EdgeIndex e : inc)
                ++blue_in_edge[e];
        }
    }

    out.coloring.violating_edge = is_proper(h, colors);
    out.coloring.proper = !out.coloring.violating_edge.has_value();
    if (!out.coloring.proper) {
        // Only Red edges can be monochromatic; take the first one.
        for (EdgeIndex e = *out.coloring.violating_edge; e < h.edge_count(); ++e) {
            const auto edge = h.edge(e);
            if (std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return colors[v] == Color::Red; })) {
                out.separated_witness = extract_witness(h, order, colors, e);
                break;
            }
        }
    }
    return out;
}

Decision exhaustive_decide(const Hypergraph& h, std::size_t vertex_budget)
{
    const auto covered = h.covered_vertices();
    const std::size_t c = covered.size();
    Decision d;
    if (c > std::min<std::size_t>(vertex_budget, 63))
        return d;

    std::vector<std::size_t> bit_of(h.vertex_count(), 0);
    for (std::size_t i = 0; i < c; ++i)
        bit_of[covered[i]] = i;
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::uint64_t m = 0;
        for (Vertex v : e)
            m |= std::uint64_t{1} << bit_of[v];
        masks.push_back(m);
    }

    auto build = [&](std::uint64_t red_bits) {
        std::vector<Color> colors(h.vertex_count(), Color::Blue);
        for (std::size_t i = 0; i < c; ++i)
            if (red_bits >> i & 1)
                colors[covered[i]] = Color::Red;
        return colors;
    };

    if (c == 0) {
        d.verdict = Colorability::Yes;
        d.coloring = build(0);
        return d;
    }

    // Bit 0 (the first covered vertex) stays Blue: swapping colors maps
    // proper colorings to proper colorings.
    const std::uint64_t count = std::uint64_t{1} << (c - 1);
    for (std::uint64_t x = 0; x < count; ++x) {
        const std::uint64_t red = x << 1;
        const bool ok = std::none_of(masks.begin(), masks.end(), [&](std::uint64_t m) {
            const std::uint64_t r = red & m;
            return r == 0 || r == m;
        });
        if (ok) {
            d.verdict = Colorability::Yes;
            d.coloring = build(red);
            return d;
        }
    }
    d.verdict = Colorability::No;
    return d;
}

std::optional<Hypergraph> critical_subhypergraph(const Hypergraph& h, std::size_t vertex_budget)
{
    if (exhaustive_decide(h, vertex_budget).verdict != Colorability::No)
        return std::nullopt;
    // Removing an edge never makes a colorable hypergraph non-colorable, so
    // a single pass leaves a core in which every edge is needed.
    auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size();) {
        auto trial = edges;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (exhaustive_decide(normalize(trial, h.uniformity(), h.vertex_count()), vertex_budget).verdict ==
            Colorability::No)
            edges = std::move(trial);
        else
            ++i;
    }
    return normalize(std::move(edges), h.uniformity(), h.vertex_count());
}

std::optional<bool> critical_seymour_check(const Hypergraph& h, std::size_t vertex_budget)
{
    const auto core = critical_subhypergraph(h, vertex_budget);
    if (!core)
        return std::nullopt;
    return seymour_check(*core);
}

std::optional<RestartResult> random_restart_color(const Hypergraph& h, std::uint64_t max_trials,
                                                  std::uint64_t seed, unsigned threads)
{
    if (max_trials == 0)
        throw Error(ErrorKind::InvalidArgument, "max_trials must be at least 1");
    const unsigned workers = resolve_threads(threads);
    const std::uint64_t batch = std::uint64_t{workers} * 256;
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();

    for (std::uint64_t start = 0; start < max_trials; start += batch) {
        const std::uint64_t len = std::min(batch, max_trials - start);
        std::vector<std::uint64_t> first_success(workers, none);
        parallel_chunks(len, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const std::uint64_t trial = start + i;
                auto rng = stream_for(seed, trial);
                const auto order = random_ordering(h.vertex_count(), rng);
                if (pluhar_color(h, order).coloring.proper) {
                    first_success[w] = trial;
                    return;
                }
            }
        });
        const auto best = *std::min_element(first_success.begin(), first_success.end());
        if (best != none) {
            auto rng = stream_for(seed, best);
            auto order = random_ordering(h.vertex_count(), rng);
            auto outcome = pluhar_color(h, order);
            return RestartResult{best, std::move(order), std::move(outcome.coloring)};
        }
    }
    return std::nullopt;
}

} // namespace propb
