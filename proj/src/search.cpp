#include "propb/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "propb/coloring.hpp"
#include "propb/error.hpp"
#include "propb/exact.hpp"
#include "propb/parallel.hpp"
#include "propb/random.hpp"
#include "propb/separation.hpp"
#include "propb/setpairs.hpp"

namespace propb {

void SearchSummary::merge(const SearchSummary& other)
{
    instances_tested += other.instances_tested;
    non_colorable += other.non_colorable;
    if (other.min_m2 && (!min_m2 || *other.min_m2 < *min_m2))
        min_m2 = other.min_m2;
    equality_cases += other.equality_cases;
    equality_with_clique += other.equality_with_clique;
    seymour_violations += other.seymour_violations;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
}

std::string encode_edges(const std::vector<Edge>& edges)
{
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            s += ';';
        for (std::size_t j = 0; j < edges[i].size(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(edges[i][j]);
        }
    }
    return s;
}

namespace {

constexpr std::size_t kMaxGraphVertices = 11; // C(11,2) = 55 pair bits

// Pair (i, j), i < j, in lexicographic order <-> bit index.
struct PairTable {
    std::size_t p = 0;
    std::array<std::array<std::uint8_t, kMaxGraphVertices>, kMaxGraphVertices> index{};
    std::vector<std::pair<Vertex, Vertex>> pairs;

    explicit PairTable(std::size_t vertices)
        : p(vertices)
    {
        for (Vertex i = 0; i < p; ++i)
            for (Vertex j = i + 1; j < p; ++j) {
                index[i][j] = index[j][i] = static_cast<std::uint8_t>(pairs.size());
                pairs.emplace_back(i, j);
            }
    }
};

struct GraphView {
    std::array<std::uint16_t, kMaxGraphVertices> adj{};
    std::array<std::uint8_t, kMaxGraphVertices> deg{};
    std::size_t edges = 0;
};

GraphView view_of(std::uint64_t mask, const PairTable& t)
{
    GraphView g;
    while (mask) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
        mask &= mask - 1;
        const auto [a, b] = t.pairs[bit];
        g.adj[a] |= static_cast<std::uint16_t>(1u << b);
        g.adj[b] |= static_cast<std::uint16_t>(1u << a);
        ++g.deg[a];
        ++g.deg[b];
        ++g.edges;
    }
    return g;
}

bool is_bipartite(const GraphView& g, std::size_t p)
{
    std::array<int, kMaxGraphVertices> side{};
    side.fill(-1);
    std::array<Vertex, kMaxGraphVertices> queue{};
    for (Vertex s = 0; s < p; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const Vertex u = queue[head++];
            for (std::uint16_t nb = g.adj[u]; nb; nb &= static_cast<std::uint16_t>(nb - 1)) {
                const auto v = static_cast<Vertex>(std::countr_zero(nb));
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue[tail++] = v;
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_triangle(const GraphView& g, std::size_t p)
{
    for (Vertex u = 0; u < p; ++u)
        for (std::uint16_t nb = g.adj[u]; nb; nb &= static_cast<std::uint16_t>(nb - 1)) {
            const auto v = static_cast<Vertex>(std::countr_zero(nb));
            if (v > u && (g.adj[u] & g.adj[v]))
                return true;
        }
    return false;
}

// Two distinct graph edges share at most one vertex, so every pair of edges
// at a common vertex is simple: m2 = Σ deg (deg - 1).
std::uint64_t graph_m2(const GraphView& g, std::size_t p)
{
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < p; ++v)
        total += std::uint64_t{g.deg[v]} * (g.deg[v] > 0 ? g.deg[v] - 1u : 0u);
    return total;
}

std::uint64_t canonical_mask(const GraphView& g, std::uint64_t mask, const PairTable& t)
{
    const std::size_t p = t.p;
    std::vector<Vertex> by_degree(p);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.deg[a] > g.deg[b]; });

    // Cells of equal degree occupy contiguous new-label ranges.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < p;) {
        std::size_t j = i;
        while (j < p && g.deg[by_degree[j]] == g.deg[by_degree[i]])
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    std::array<Vertex, kMaxGraphVertices> label{};
    std::uint64_t best = ~std::uint64_t{0};
    auto encode = [&] {
        for (std::size_t pos = 0; pos < p; ++pos)
            label[by_degree[pos]] = static_cast<Vertex>(pos);
        std::uint64_t out = 0;
        for (std::uint64_t m = mask; m; m &= m - 1) {
            const auto [a, b] = t.pairs[static_cast<std::size_t>(std::countr_zero(m))];
            out |= std::uint64_t{1} << t.index[label[a]][label[b]];
        }
        return out;
    };
    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            best = std::min(best, encode());
            return;
        }
        const auto [lo, hi] = cells[cell];
        std::sort(by_degree.begin() + static_cast<std::ptrdiff_t>(lo), by_degree.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            self(self, cell + 1);
        } while (std::next_permutation(by_degree.begin() + static_cast<std::ptrdiff_t>(lo),
                                       by_degree.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    recurse(recurse, 0);
    return best;
}

std::vector<Edge> mask_edges(std::uint64_t mask, const PairTable& t)
{
    std::vector<Edge> edges;
    for (; mask; mask &= mask - 1) {
        const auto [a, b] = t.pairs[static_cast<std::size_t>(std::countr_zero(mask))];
        edges.push_back({a, b});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

void note_instance(SearchSummary& s, const SearchRecord& r)
{
    ++s.non_colorable;
    if (!s.min_m2 || r.m2 < *s.min_m2)
        s.min_m2 = r.m2;
    if (r.meets_bound) {
        ++s.equality_cases;
        if (r.has_clique)
            ++s.equality_with_clique;
    }
    if (!r.seymour_ok)
        ++s.seymour_violations;
}

std::optional<std::string> violation_of(const SearchRecord& r, const BigInt& bound_value)
{
    if (BigInt(r.m2) < bound_value)
        return "m2 below the bound";
    if (r.meets_bound && !r.has_clique)
        return "m2 meets the bound but no complete sub-hypergraph on 2n-1 vertices";
    return std::nullopt;
}

std::optional<std::string> cross_check_record(const SearchRecord& r, const std::vector<Edge>& edges)
{
    const auto h = normalize(edges, 2, r.p);
    if (m2(h) != r.m2)
        return "graph m2 disagrees with hypergraph m2";
    if (exhaustive_decide(h).verdict != Colorability::No)
        return "bipartiteness disagrees with the exhaustive decider";
    if (find_clique(h).has_value() != r.has_clique)
        return "triangle test disagrees with clique search";
    if (seymour_check(h) != r.seymour_ok)
        return "edge/vertex count disagrees with seymour_check";
    return std::nullopt;
}

} // namespace

std::uint64_t canonical_graph_mask(std::uint64_t mask, std::size_t p)
{
    if (p > kMaxGraphVertices)
        throw Error(ErrorKind::InvalidArgument, "canonical form supports at most 11 vertices");
    const PairTable t(p);
    return canonical_mask(view_of(mask, t), mask, t);
}

SearchPass verify_graphs(std::size_t p, const SearchOptions& options)
{
    if (p == 0 || p > kMaxGraphVertices)
        throw Error(ErrorKind::InvalidArgument, "graph enumeration needs 1 <= p <= 11");
    const PairTable t(p);
    const std::size_t pair_count = t.pairs.size();
    if (pair_count >= 63)
        throw Error(ErrorKind::BudgetExceeded, "too many labeled graphs");
    const std::uint64_t total = std::uint64_t{1} << pair_count;
    const BigInt bound_value = bound(2);

    struct Local {
        SearchSummary summary;
        std::map<std::uint64_t, SearchRecord> records;
        std::vector<std::string> mismatches;
    };
    const unsigned workers = resolve_threads(options.threads);
    std::vector<Local> locals(workers);

    parallel_chunks(total, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& local = locals[w];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const auto g = view_of(mask, t);
            std::optional<std::uint64_t> canon;
            if (options.isomorph_rejection) {
                // A representative lists its vertices by non-increasing degree.
                if (!std::is_sorted(g.deg.begin(), g.deg.begin() + static_cast<std::ptrdiff_t>(p), std::greater<>()))
                    continue;
                canon = canonical_mask(g, mask, t);
                if (*canon != mask)
                    continue;
            }
            ++local.summary.instances_tested;
            if (is_bipartite(g, p))
                continue;

            SearchRecord r;
            r.n = 2;
            r.p = p;
            r.edge_count = g.edges;
            r.m2 = graph_m2(g, p);
            r.meets_bound = BigInt(r.m2) == bound_value;
            r.has_clique = has_triangle(g, p);
            std::size_t covered = 0;
            for (std::size_t v = 0; v < p; ++v)
                covered += g.deg[v] > 0;
            r.seymour_ok = g.edges >= covered;
            note_instance(local.summary, r);

            if (!canon)
                canon = canonical_mask(g, mask, t);
            auto [it, inserted] = local.records.try_emplace(*canon, r);
            if (inserted)
                it->second.canonical_form = encode_edges(mask_edges(*canon, t));
            else if (it->second.m2 != r.m2 || it->second.has_clique != r.has_clique ||
                     it->second.edge_count != r.edge_count || it->second.seymour_ok != r.seymour_ok)
                local.mismatches.push_back(it->second.canonical_form);
        }
    });

    SearchPass pass;
    pass.p = p;
    pass.summary.n = 2;
    std::map<std::uint64_t, SearchRecord> merged;
    for (auto& local : locals) {
        pass.summary.merge(local.summary);
        for (auto& [key, rec] : local.records)
            merged.try_emplace(key, std::move(rec));
        for (auto& form : local.mismatches)
            pass.summary.counterexamples.push_back({SearchRecord{2, p, 0, 0, false, false, false, form},
                                                   "isomorphic labelings disagree on their profile"});
    }
    for (auto& [key, rec] : merged) {
        if (auto why = violation_of(rec, bound_value))
            pass.summary.counterexamples.push_back({rec, *why});
        if (options.cross_check)
            if (auto why = cross_check_record(rec, mask_edges(key, t)))
                pass.summary.counterexamples.push_back({rec, *why});
        pass.records.push_back(std::move(rec));
    }
    std::sort(pass.records.begin(), pass.records.end());
    return pass;
}

SearchPass verify_sampled(std::size_t n, std::size_t p, const SearchOptions& options)
{
    if (n < 2 || p < 2 * n - 1)
        throw Error(ErrorKind::InvalidArgument, "sampling needs n >= 2 and p >= 2n-1");
    if (p > options.vertex_budget)
        throw Error(ErrorKind::BudgetExceeded, "p = " + std::to_string(p) + " exceeds the exhaustive-decider budget");
    const BigInt bound_value = bound(n);
    const auto space = static_cast<std::uint64_t>(binomial(p, n));
    const std::uint64_t lo = std::max<std::uint64_t>(1, space / 2);
    const std::uint64_t stream = mix64(options.seed ^ mix64(n * 1000 + p));

    struct Local {
        SearchSummary summary;
        std::vector<SearchRecord> records;
    };
    const unsigned workers = resolve_threads(options.threads);
    std::vector<Local> locals(workers);
    parallel_chunks(options.samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& local = locals[w];
        for (std::size_t s = begin; s < end; ++s) {
            auto rng = stream_for(stream, s);
            const std::uint64_t m = lo + uniform_below(rng, space - lo + 1);
            const auto h = random_hypergraph(n, p, m, rng());
            ++local.summary.instances_tested;
            if (exhaustive_decide(h, options.vertex_budget).verdict != Colorability::No)
                continue;
            SearchRecord r;
            r.n = n;
            r.p = p;
            r.edge_count = h.edge_count();
            r.m2 = m2(h);
            r.meets_bound = BigInt(r.m2) == bound_value;
            r.has_clique = find_clique(h).has_value();
            r.seymour_ok = seymour_check(h);
            r.canonical_form = encode_edges(h.edges());
            note_instance(local.summary, r);
            local.records.push_back(std::move(r));
        }
    });

    SearchPass pass;
    pass.p = p;
    pass.summary.n = n;
    for (auto& local : locals) {
        pass.summary.merge(local.summary);
        pass.records.insert(pass.records.end(), local.records.begin(), local.records.end());
    }
    std::sort(pass.records.begin(), pass.records.end());
    pass.records.erase(std::unique(pass.records.begin(), pass.records.end()), pass.records.end());
    for (const auto& rec : pass.records)
        if (auto why = violation_of(rec, bound_value))
            pass.summary.counterexamples.push_back({rec, *why});
    return pass;
}

SearchRun verify_bound_exhaustive(std::size_t n, std::size_t max_p, const SearchOptions& options,
                                  const std::function<bool(std::size_t)>& skip,
                                  const std::function<void(const SearchPass&)>& on_pass)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "uniformity must be at least 2");
    std::size_t first_p = 2 * n - 1;
    if (n == 2) {
        first_p = 1;
        if (max_p > kMaxGraphVertices)
            throw Error(ErrorKind::BudgetExceeded, "graph enumeration supports at most 11 vertices");
        BigInt labeled = 0;
        for (std::size_t p = 1; p <= max_p; ++p)
            labeled += BigInt(1) << (p * (p - 1) / 2);
        if (labeled > BigInt(options.budget))
            throw Error(ErrorKind::BudgetExceeded, labeled.str() + " labeled graphs exceed the budget of " +
                                                       std::to_string(options.budget));
    }

    SearchRun run;
    run.total.n = n;
    for (std::size_t p = first_p; p <= max_p; ++p) {
        if (skip && skip(p))
            continue;
        auto pass = n == 2 ? verify_graphs(p, options) : verify_sampled(n, p, options);
        run.total.merge(pass.summary);
        if (on_pass)
            on_pass(pass);
        run.passes.push_back(std::move(pass));
    }
    return run;
}

namespace {

[[noreturn]] void fixture_failure(const std::string& fixture, const std::string& what)
{
    throw Error(ErrorKind::FixtureFailure, fixture + ": " + what);
}

FixtureResult run_fixture(const std::string& name, const Hypergraph& h, const std::optional<std::vector<Vertex>>& expected_clique)
{
    FixtureResult r;
    r.name = name;
    r.p = h.vertex_count();
    r.edge_count = h.edge_count();
    const auto n = h.uniformity();
    const BigInt bound_value = bound(n);

    const auto decision = exhaustive_decide(h);
    if (decision.verdict == Colorability::Undetermined)
        fixture_failure(name, "exhaustive decider ran out of budget");
    r.non_colorable = decision.verdict == Colorability::No;
    if (!r.non_colorable)
        fixture_failure(name, "expected a non-2-colorable fixture");

    r.m2 = m2(h);
    if (BigInt(r.m2) < bound_value)
        fixture_failure(name, "m2 = " + std::to_string(r.m2) + " is below the bound " + bound_value.str());
    r.meets_bound = BigInt(r.m2) == bound_value;
    r.seymour_ok = seymour_check(h);
    r.critical_seymour_ok = critical_seymour_check(h).value_or(false);
    if (!r.critical_seymour_ok)
        fixture_failure(name, "a minimal non-colorable core has fewer edges than covered vertices");
    r.clique = find_clique(h);

    if (r.meets_bound) {
        const auto family = bollobas_family(h, build_M(h));
        const auto verdict = evaluate_family(family);
        r.conditions_ok = verdict.conditions_ok;
        r.sum_is_one = verdict.sum == 1;
        r.equality_structure = verdict.equality;
        if (!r.conditions_ok)
            fixture_failure(name, "set-pair family violates the cross-intersection conditions");
        if (!r.sum_is_one)
            fixture_failure(name, "set-pair sum is " + to_string(verdict.sum) + ", expected 1");
        if (!r.equality_structure)
            fixture_failure(name, "equality structure not detected");
        if (!r.clique)
            fixture_failure(name, "meets the bound but contains no complete sub-hypergraph on 2n-1 vertices");
        if (!is_complete_on(h, *verdict.ground_u))
            fixture_failure(name, "ground set minus common B is not a clique");
        if (!check_distinct_meets(h).empty())
            fixture_failure(name, "two simple pairs share their second edge and meet vertex");
        if (h.vertex_count() <= kEnumerationVertexBudget && !check_single_separation(h).empty())
            fixture_failure(name, "an ordering separates more than one simple pair");
    }
    if (expected_clique && r.clique != expected_clique)
        fixture_failure(name, "clique differs from the planted one");
    return r;
}

} // namespace

FixtureReport verify_fixture_suite(std::size_t n, std::uint64_t seed)
{
    if (n < 2 || n > 4)
        throw Error(ErrorKind::InvalidArgument, "fixture suite covers n in {2, 3, 4}");
    FixtureReport report;
    report.n = n;

    const auto k = complete_hypergraph(n);
    std::vector<Vertex> planted(2 * n - 1);
    std::iota(planted.begin(), planted.end(), 0);

    report.fixtures.push_back(run_fixture("complete", k, planted));
    report.fixtures.push_back(run_fixture("padded-1", pad(k, n, 1), planted));
    report.fixtures.push_back(run_fixture("padded-2", pad(k, 2 * n + 1, 2), planted));
    if (n == 3)
        report.fixtures.push_back(run_fixture("fano", fano_plane(), std::nullopt));

    // Rejection-sampled non-colorable instances on 2n vertices.
    const std::size_t p = 2 * n;
    const auto space = static_cast<std::uint64_t>(binomial(p, n));
    std::size_t found = 0;
    for (std::uint64_t attempt = 0; found < 3 && attempt < 1000; ++attempt) {
        auto rng = stream_for(seed, attempt);
        const std::uint64_t m = space / 2 + uniform_below(rng, space - space / 2 + 1);
        const auto h = random_hypergraph(n, p, m, rng());
        if (exhaustive_decide(h).verdict != Colorability::No)
            continue;
        report.fixtures.push_back(run_fixture("random-" + std::to_string(found), h, std::nullopt));
        ++found;
    }
    if (found < 3)
        fixture_failure("random", "rejection sampling found fewer than 3 non-colorable instances");
    return report;
}

} // namespace propb
