// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run everything
//   acceptance --criterion N   run criterion N only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "propb/analysis.hpp"
#include "propb/cli.hpp"
#include "propb/coloring.hpp"
#include "propb/hypergraph.hpp"
#include "propb/hypergraph_file.hpp"
#include "propb/random.hpp"
#include "propb/report.hpp"
#include "propb/search.hpp"
#include "propb/separation.hpp"
#include "propb/setpairs.hpp"

using namespace propb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Vertex> first_vertices(std::size_t k)
{
    std::vector<Vertex> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Extremal fixtures shared by criteria 5 and 8.
struct Fixture {
    std::string name;
    Hypergraph h;
};

std::vector<Fixture> extremal_fixtures()
{
    std::vector<Fixture> out;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto k = complete_hypergraph(n);
        const auto tag = "K^" + std::to_string(n) + "_" + std::to_string(2 * n - 1);
        out.push_back({tag, k});
        out.push_back({tag + "+pad(n,1)", pad(k, n, 1)});
        out.push_back({tag + "+pad(2n+1,2)", pad(k, 2 * n + 1, 2)});
    }
    return out;
}

Outcome criterion_1()
{
    Outcome o;
    const auto start = Clock::now();
    const std::uint64_t expected[] = {6, 30, 140, 630, 2772};
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto k = complete_hypergraph(n);
        const auto listed = enumerate_simple_pairs(k).size();
        const auto streamed = m2(k);
        const BigInt closed = BigInt(n) * binomial(2 * n - 1, n);
        o.require(listed == streamed, "list/stream mismatch at n=" + std::to_string(n));
        o.require(BigInt(listed) == closed, "m2 != n*C(2n-1,n) at n=" + std::to_string(n));
        o.require(closed == expected[n - 2], "closed form != tabulated value at n=" + std::to_string(n));
        o.require(bound(n) == closed, "bound() disagrees at n=" + std::to_string(n));
    }
    const double t = seconds_since(start);
    o.require(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("n=2..6 -> 6 30 140 630 2772, ") +
                std::to_string(t) + " s";
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    const Rational tabulated[] = {Rational(1, 6), Rational(1, 30), Rational(1, 140)};
    double t4 = 0;
    for (std::uint64_t n = 2; n <= 4; ++n) {
        Edge x(n), y(n);
        std::iota(x.begin(), x.end(), 0);
        std::iota(y.begin(), y.end(), static_cast<Vertex>(n - 1));
        const auto start = Clock::now();
        const auto enumerated = enumerate_separation_probability(x, y);
        if (n == 4)
            t4 = seconds_since(start);
        const auto f = factorial(n - 1);
        const Rational closed(f * f, factorial(2 * n - 1));
        o.require(enumerated == closed, "enumeration != (n-1)!^2/(2n-1)! at n=" + std::to_string(n));
        o.require(enumerated == tabulated[n - 2], "value != tabulated at n=" + std::to_string(n));
        o.require(exact_separation_probability(n) == closed, "closed-form routine disagrees");
    }
    o.require(t4 < 10.0, "n=4 enumeration took " + std::to_string(t4) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("1/6 1/30 1/140; n=4 in ") + std::to_string(t4) + " s";
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uint64_t improper = 0, blue_violations = 0, witness_violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t p = n + 1 + uniform_below(rng, 12 - n);
        const auto space = static_cast<std::uint64_t>(binomial(p, n));
        const std::size_t m = 1 + uniform_below(rng, std::min<std::uint64_t>(space, 24));
        const auto h = random_hypergraph(n, p, m, rng());
        const auto order = random_ordering(p, rng);
        const auto out = pluhar_color(h, order);
        const auto& colors = out.coloring.colors;
        for (const auto& e : h.edges())
            if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == Color::Blue; }))
                ++blue_violations;
        if (out.coloring.proper)
            continue;
        ++improper;
        if (!out.separated_witness) {
            ++witness_violations;
            continue;
        }
        const auto& s = *out.separated_witness;
        const auto& y = h.edges()[s.second];
        const bool simple = h.meet(s.first, s.second) == s.meet;
        const bool red = std::all_of(y.begin(), y.end(), [&](Vertex v) { return colors[v] == Color::Red; });
        bool separated = false;
        try {
            separated = separates(order, h.edge(s.first), h.edge(s.second));
        } catch (const Error&) {
        }
        if (!simple || !red || !separated)
            ++witness_violations;
    }
    o.require(blue_violations == 0, std::to_string(blue_violations) + " all-Blue edges");
    o.require(witness_violations == 0, std::to_string(witness_violations) + " bad witnesses");
    o.require(improper > 0, "no improper runs exercised");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("10000 runs, ") + std::to_string(improper) +
                " improper, 0 violations required";
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    std::mt19937_64 rng(4242);
    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t p = n + 1 + uniform_below(rng, 7 - n);
        const auto space = static_cast<std::uint64_t>(binomial(p, n));
        const auto h = random_hypergraph(n, p, 1 + uniform_below(rng, space), rng());
        const auto mean = exact_mean_separated(h, 7);
        if (mean != Rational(BigInt(m2(h)), bound(n)))
            ++mismatches;
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " of 50 means differ from m2/bound");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("50 hypergraphs, exact rational comparison");
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    for (const auto& [name, h] : extremal_fixtures()) {
        const auto n = h.uniformity();
        o.require(exhaustive_decide(h).verdict == Colorability::No, name + " colorable");
        o.require(BigInt(m2(h)) == bound(n), name + " m2 != bound");
        const auto family = bollobas_family(h, build_M(h));
        const auto conditions = check_conditions(family);
        o.require(conditions.conditions_ok, name + " violates the set-pair conditions");
        o.require(bollobas_sum(family) == 1, name + " sum != 1");
        std::optional<EqualityStructure> eq;
        try {
            eq = detect_equality_structure(family);
        } catch (const Error& e) {
            o.require(false, name + " " + e.what());
        }
        o.require(eq.has_value(), name + " equality structure not detected");
        const auto clique = find_clique(h);
        o.require(clique == first_vertices(2 * n - 1), name + " clique differs from the original vertices");
        if (eq)
            o.require(eq->ground_u == first_vertices(2 * n - 1), name + " U differs from the clique");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("K^n_{2n-1}, n=2,3,4, each with two padded variants");
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    for (std::size_t n : {2u, 3u}) {
        const auto k = complete_hypergraph(n);
        const auto pairs = enumerate_simple_pairs(k);
        auto seq = first_vertices(k.vertex_count());
        std::uint64_t orderings = 0, exact_one = 0;
        do {
            ++orderings;
            exact_one += count_separated(k, pairs, Ordering::from_sequence(seq, seq.size())) == 1;
        } while (std::next_permutation(seq.begin(), seq.end()));
        o.require(orderings == exact_one, "K^" + std::to_string(n) + ": " + std::to_string(orderings - exact_one) +
                                              " orderings do not separate exactly one pair");
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("K^") + std::to_string(n) + ": " +
                    std::to_string(exact_one) + "/" + std::to_string(orderings);
    }
    return o;
}

struct GraphRun {
    SearchRun run;
    double seconds = 0;
};

const GraphRun& graph_run()
{
    static const GraphRun cached = [] {
        GraphRun g;
        SearchOptions opts;
        opts.threads = 0;
        const auto start = Clock::now();
        g.run = verify_bound_exhaustive(2, 7, opts);
        g.seconds = seconds_since(start);
        return g;
    }();
    return cached;
}

Outcome criterion_7()
{
    Outcome o;
    const auto& g = graph_run();
    const auto& total = g.run.total;
    o.require(total.counterexamples.empty(), std::to_string(total.counterexamples.size()) + " counterexamples");
    o.require(total.min_m2 && *total.min_m2 >= 6, "a non-bipartite graph has m2 < 6");
    o.require(total.equality_cases == total.equality_with_clique, "an m2 = 6 graph has no triangle");
    o.require(total.instances_tested == 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152, "not every labeled graph tested");
    o.require(g.seconds < 600, "enumeration exceeded 10 minutes");

    const auto fano = fano_plane();
    o.require(exhaustive_decide(fano).verdict == Colorability::No, "Fano plane colorable");
    o.require(m2(fano) == 42, "Fano m2 != 42");
    o.require(BigInt(m2(fano)) > bound(3), "Fano does not exceed the bound strictly");

    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(total.instances_tested) + " labeled graphs on <= 7 vertices, " +
                std::to_string(total.non_colorable) + " non-bipartite, min m2 " +
                (total.min_m2 ? std::to_string(*total.min_m2) : "-") + ", " + std::to_string(total.equality_cases) +
                " equality cases all with triangle, " + std::to_string(g.seconds) + " s; Fano m2 = 42 > 30";
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    std::uint64_t checked = 0, violations = 0, critical_violations = 0;
    std::string first_violation;
    auto note = [&](const std::string& name, const Hypergraph& h) {
        ++checked;
        if (!seymour_check(h)) {
            ++violations;
            if (first_violation.empty())
                first_violation = name + " (" + std::to_string(h.edge_count()) + " edges, " +
                                  std::to_string(h.covered_vertices().size()) + " covered vertices)";
        }
        if (critical_seymour_check(h) != true)
            ++critical_violations;
    };
    for (const auto& [name, h] : extremal_fixtures())
        note(name, h);
    const auto k35 = complete_hypergraph(3);
    note("K^3_5", k35);
    note("K^2_3", complete_hypergraph(2));
    note("Fano", fano_plane());

    // Criterion 7 instances: one per isomorphism class; labeled counts come
    // from the search summary.
    const auto& g = graph_run();
    std::uint64_t graph_classes = 0, graph_class_violations = 0;
    for (const auto& pass : g.run.passes)
        for (const auto& r : pass.records) {
            ++graph_classes;
            graph_class_violations += !r.seymour_ok;
            if (!r.seymour_ok && first_violation.empty())
                first_violation = "graph " + r.canonical_form;
        }
    const std::uint64_t graph_violations = g.run.total.seymour_violations;

    o.require(violations == 0, std::to_string(violations) + " fixture(s) with |E| < |covered V|, first: " +
                                   first_violation);
    o.require(graph_violations == 0, std::to_string(graph_violations) + " non-bipartite labeled graphs (" +
                                         std::to_string(graph_class_violations) + " of " +
                                         std::to_string(graph_classes) +
                                         " isomorphism classes) with |E| < |covered V|");
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "critical-core form: " +
                std::to_string(critical_violations) + " violations over " + std::to_string(checked) + " fixtures";
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    const auto tri = complete_hypergraph(2);
    const auto a = monte_carlo_separation(tri, 100000, 9);
    const auto b = monte_carlo_separation(tri, 100000, 9);
    const double band = 3 * a.standard_error;
    o.require(std::abs(a.mean - 1.0) <= band, "mean " + std::to_string(a.mean) + " outside 1 +- 3 sigma");
    o.require(monte_carlo_json(a, 9).dump() == monte_carlo_json(b, 9).dump(), "rerun differs");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("mean ") + to_string(a.mean_separated) +
                ", 3 sigma = " + std::to_string(band);
    return o;
}

Outcome criterion_10()
{
    Outcome o;
    std::mt19937_64 rng(10);
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + uniform_below(rng, 4);
        const std::size_t p = n + uniform_below(rng, 8);
        const auto space = static_cast<std::uint64_t>(binomial(p, n));
        const auto h = random_hypergraph(n, p, uniform_below(rng, std::min<std::uint64_t>(space, 15) + 1), rng());
        if (!(parse_hypergraph(render_hypergraph(h)) == h))
            ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " round-trip failures");

    const auto dir = std::filesystem::temp_directory_path() / "propb-acceptance";
    std::filesystem::create_directories(dir);
    const auto file = (dir / "k35.txt").string();
    std::ofstream(file, std::ios::binary) << render_hypergraph(complete_hypergraph(3));
    auto run = [&] {
        const char* argv[] = {"propb", "analyze", file.c_str(), "--json", "--deterministic"};
        std::ostringstream out, err;
        const int code = run_cli(5, argv, out, err);
        return std::make_pair(code, out.str());
    };
    const auto first = run();
    const auto second = run();
    o.require(first.first == kExitOk, "analyze failed");
    o.require(first.second == second.second, "analyze output not byte-identical");
    std::filesystem::remove_all(dir);
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("500 round trips, analyze K^3_5 twice identical");
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--criterion" && i + 1 < argc)
            only = std::stoi(argv[++i]);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"m2 of complete hypergraphs equals n*C(2n-1,n), n=2..6", criterion_1},
        {"separation probability by enumeration, n=2,3,4", criterion_2},
        {"greedy coloring failures yield separated simple pairs", criterion_3},
        {"mean separated count over all orderings equals m2/bound", criterion_4},
        {"extremal pipeline on cliques and padded cliques", criterion_5},
        {"every ordering of K^3_5 and K^2_3 separates exactly one pair", criterion_6},
        {"all graphs on <= 7 vertices: m2 >= 6, equality => triangle", criterion_7},
        {"non-colorable instances satisfy |E| >= |covered V|", criterion_8},
        {"Monte Carlo mean on the triangle within 3 sigma, reproducible", criterion_9},
        {"file round trip and deterministic analyze output", criterion_10},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (only != 0 && only != id)
            continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
