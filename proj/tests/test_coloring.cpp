#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "propb/coloring.hpp"
#include "propb/error.hpp"
#include "propb/exact.hpp"
#include "propb/random.hpp"
#include "propb/separation.hpp"

using namespace propb;

namespace {

Hypergraph triangle()
{
    return normalize({{0, 1}, {1, 2}, {0, 2}}, 2, 3);
}

bool has_all_blue_edge(const Hypergraph& h, const std::vector<Color>& colors)
{
    for (const auto& e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == Color::Blue; }))
            return true;
    return false;
}

} // namespace

TEST_CASE("ordering validation")
{
    CHECK_THROWS_AS(Ordering::from_sequence({0, 0, 1}, 3), Error);
    CHECK_THROWS_AS(Ordering::from_sequence({0, 1}, 3), Error);
    CHECK_THROWS_AS(Ordering::from_sequence({0, 1, 3}, 3), Error);
    const auto o = Ordering::from_sequence({2, 0, 1}, 3);
    CHECK(o.rank(2) == 0);
    CHECK(o.rank(1) == 2);
    CHECK(o.at(1) == 0);
}

TEST_CASE("single edge is colored Blue then Red")
{
    const auto h = normalize({{0, 1}}, 2, 2);
    const auto out = pluhar_color(h, Ordering::identity(2));
    CHECK(out.coloring.colors == std::vector<Color>{Color::Blue, Color::Red});
    CHECK(out.coloring.proper);
    CHECK_FALSE(out.coloring.violating_edge);
    CHECK_FALSE(out.separated_witness);
}

TEST_CASE("triangle hand trace")
{
    // Vertices a, b, c = 0, 1, 2 processed in that order.
    const auto h = triangle();
    const auto out = pluhar_color(h, Ordering::identity(3));
    CHECK(out.coloring.colors == std::vector<Color>{Color::Blue, Color::Red, Color::Red});
    CHECK_FALSE(out.coloring.proper);
    REQUIRE(out.coloring.violating_edge);
    CHECK(h.edges()[*out.coloring.violating_edge] == Edge{1, 2});
    REQUIRE(out.separated_witness);
    CHECK(h.edges()[out.separated_witness->first] == Edge{0, 1});
    CHECK(h.edges()[out.separated_witness->second] == Edge{1, 2});
    CHECK(out.separated_witness->meet == 1);
    CHECK(separates(Ordering::identity(3), h.edge(out.separated_witness->first),
                    h.edge(out.separated_witness->second)));
}

TEST_CASE("pluhar_color rejects mismatched orderings")
{
    CHECK_THROWS_AS(pluhar_color(triangle(), Ordering::identity(4)), Error);
}

TEST_CASE("isolated vertices are Blue")
{
    const auto h = normalize({{0, 1}}, 2, 4);
    const auto out = pluhar_color(h, Ordering::from_sequence({3, 1, 2, 0}, 4));
    CHECK(out.coloring.colors[2] == Color::Blue);
    CHECK(out.coloring.colors[3] == Color::Blue);
}

TEST_CASE("greedy coloring never leaves an all-Blue edge; failures carry a separated pair")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + i % 2;
        const std::size_t p = n + 1 + rng() % (12 - n);
        const auto h = normalize(oracle::random_edges(rng, n, p, 1 + rng() % 20), n, p);
        const auto order = random_ordering(p, rng);
        const auto out = pluhar_color(h, order);
        REQUIRE_FALSE(has_all_blue_edge(h, out.coloring.colors));
        CHECK(out.coloring.proper == !is_proper(h, out.coloring.colors).has_value());
        // deterministic
        CHECK(pluhar_color(h, order).coloring.colors == out.coloring.colors);
        if (!out.coloring.proper) {
            REQUIRE(out.separated_witness);
            const auto& s = *out.separated_witness;
            const auto& y = h.edges()[s.second];
            CHECK(oracle::common_count(h.edges()[s.first], y) == 1);
            CHECK(std::all_of(y.begin(), y.end(), [&](Vertex v) { return out.coloring.colors[v] == Color::Red; }));
            CHECK(separates(h, order, s));
            const std::vector<Vertex> seq(order.sequence().begin(), order.sequence().end());
            CHECK(oracle::separates(seq, h.edges()[s.first], y));
        }
    }
}

TEST_CASE("is_proper")
{
    const auto t = triangle();
    CHECK(is_proper(t, std::vector<Color>(3, Color::Blue)) == EdgeIndex{0});
    CHECK_FALSE(is_proper(normalize({{0, 1}}, 2, 2), std::vector<Color>{Color::Blue, Color::Red}));
    // K^3_5 with vertices 0,1 Red and 2,3,4 Blue: {2,3,4} is the last edge.
    const auto k = complete_hypergraph(3);
    const std::vector<Color> split{Color::Red, Color::Red, Color::Blue, Color::Blue, Color::Blue};
    const auto bad = is_proper(k, split);
    REQUIRE(bad);
    CHECK(k.edges()[*bad] == Edge{2, 3, 4});
    CHECK_THROWS_AS(is_proper(t, std::vector<Color>(2, Color::Blue)), Error);
}

TEST_CASE("exhaustive decider")
{
    CHECK(exhaustive_decide(triangle()).verdict == Colorability::No);
    CHECK(exhaustive_decide(complete_hypergraph(3)).verdict == Colorability::No);
    CHECK(exhaustive_decide(complete_hypergraph(4)).verdict == Colorability::No);
    CHECK(exhaustive_decide(fano_plane()).verdict == Colorability::No);
    CHECK(oracle::colorable(fano_plane().edges(), 7) == false);

    const auto empty = exhaustive_decide(normalize({}, 3, 5));
    CHECK(empty.verdict == Colorability::Yes);

    const auto c4 = normalize({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2, 4);
    const auto d = exhaustive_decide(c4);
    REQUIRE(d.verdict == Colorability::Yes);
    REQUIRE(d.coloring);
    CHECK_FALSE(is_proper(c4, *d.coloring));

    CHECK(exhaustive_decide(complete_hypergraph(3), 4).verdict == Colorability::Undetermined);
}

TEST_CASE("exhaustive decider agrees with the brute-force oracle")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + i % 3;
        const std::size_t p = n + 1 + rng() % (10 - n);
        const auto h = normalize(oracle::random_edges(rng, n, p, rng() % 25), n, p);
        const auto d = exhaustive_decide(h);
        CHECK((d.verdict == Colorability::Yes) == oracle::colorable(h.edges(), p));
        if (d.coloring)
            CHECK_FALSE(is_proper(h, *d.coloring));
    }
}

TEST_CASE("random restart coloring")
{
    const auto single = normalize({{0, 1}}, 2, 2);
    const auto r = random_restart_color(single, 1, 7);
    REQUIRE(r);
    CHECK(r->trial == 0);
    CHECK(r->coloring.proper);

    CHECK_FALSE(random_restart_color(complete_hypergraph(3), 10000, 1));
    CHECK_THROWS_AS(random_restart_color(single, 0, 1), Error);

    // Thread count does not change the answer.
    const auto c6 = normalize({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}, 2, 6);
    const auto one = random_restart_color(c6, 500, 3, 1);
    const auto four = random_restart_color(c6, 500, 3, 4);
    REQUIRE(one);
    REQUIRE(four);
    CHECK(one->trial == four->trial);
    CHECK(one->ordering == four->ordering);
}

TEST_CASE("below the bound, random restarts agree with the exhaustive decider")
{
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 2;
        const std::size_t p = n + 2 + rng() % 5;
        const auto h = normalize(oracle::random_edges(rng, n, p, 1 + rng() % 6), n, p);
        if (BigInt(m2(h)) >= bound(n))
            continue;
        ++checked;
        CHECK(exhaustive_decide(h).verdict == Colorability::Yes);
        const auto r = random_restart_color(h, 2000, static_cast<std::uint64_t>(i));
        REQUIRE(r);
        CHECK(r->coloring.proper);
    }
    CHECK(checked > 50);
}

TEST_CASE("below the bound some ordering colors properly (all orderings, p <= 8)")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 2 + i % 2;
        const std::size_t p = n + 2 + rng() % (7 - n);
        const auto h = normalize(oracle::random_edges(rng, n, p, 1 + rng() % 5), n, p);
        if (BigInt(m2(h)) >= bound(n))
            continue;
        std::vector<Vertex> seq(p);
        std::iota(seq.begin(), seq.end(), 0);
        bool found = false;
        do {
            found = pluhar_color(h, Ordering::from_sequence(seq, p)).coloring.proper;
        } while (!found && std::next_permutation(seq.begin(), seq.end()));
        CHECK(found);
    }
}

TEST_CASE("critical sub-hypergraph")
{
    // Triangle plus a disjoint edge: non-colorable, |E| < |covered V|.
    const auto h = pad(triangle(), 2, 1);
    CHECK(exhaustive_decide(h).verdict == Colorability::No);
    CHECK_FALSE(seymour_check(h));
    const auto core = critical_subhypergraph(h);
    REQUIRE(core);
    CHECK(core->edges() == triangle().edges());
    CHECK(critical_seymour_check(h) == true);
    CHECK_FALSE(critical_subhypergraph(normalize({{0, 1}}, 2, 2)));
}
