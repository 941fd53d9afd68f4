#include "propb/separation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "propb/error.hpp"
#include "propb/parallel.hpp"
#include "propb/random.hpp"

namespace propb {

namespace {

std::optional<Vertex> unique_common(std::span<const Vertex> x, std::span<const Vertex> y)
{
    std::vector<Vertex> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    if (common.size() != 1)
        return std::nullopt;
    return common.front();
}

bool separates_at(const Ordering& order, std::span<const Vertex> x, std::span<const Vertex> y, Vertex meet)
{
    const auto r = order.rank(meet);
    for (Vertex v : x)
        if (v != meet && order.rank(v) > r)
            return false;
    for (Vertex v : y)
        if (v != meet && order.rank(v) < r)
            return false;
    return true;
}

} // namespace

bool separates(const Ordering& order, std::span<const Vertex> x, std::span<const Vertex> y)
{
    const auto meet = unique_common(x, y);
    if (!meet)
        throw Error(ErrorKind::NotSimple, "edges do not intersect in exactly one vertex");
    return separates_at(order, x, y, *meet);
}

bool separates(const Hypergraph& h, const Ordering& order, const SimplePair& pair)
{
    return separates_at(order, h.edge(pair.first), h.edge(pair.second), pair.meet);
}

std::uint64_t count_separated(const Hypergraph& h, std::span<const SimplePair> pairs, const Ordering& order)
{
    std::uint64_t count = 0;
    for (const auto& s : pairs)
        if (separates(h, order, s))
            ++count;
    return count;
}

std::uint64_t count_separated(const Hypergraph& h, const Ordering& order)
{
    const auto pairs = enumerate_simple_pairs(h);
    return count_separated(h, pairs, order);
}

Rational exact_separation_probability(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "uniformity must be positive");
    const BigInt f = factorial(n - 1);
    return Rational(f * f, factorial(2 * n - 1));
}

Rational enumerate_separation_probability(std::span<const Vertex> x, std::span<const Vertex> y,
                                          std::size_t union_budget)
{
    const auto meet = unique_common(x, y);
    if (!meet)
        throw Error(ErrorKind::NotSimple, "edges do not intersect in exactly one vertex");
    std::vector<Vertex> ground;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(ground));
    if (ground.size() > union_budget)
        throw Error(ErrorKind::BudgetExceeded, "|X u Y| = " + std::to_string(ground.size()) +
                                                   " exceeds enumeration budget " +
                                                   std::to_string(union_budget));

    // Relabel the union to 0..u-1 so Ordering can index it densely.
    auto local = [&](std::span<const Vertex> e) {
        std::vector<Vertex> out;
        for (Vertex v : e)
            out.push_back(static_cast<Vertex>(std::lower_bound(ground.begin(), ground.end(), v) - ground.begin()));
        return out;
    };
    const auto lx = local(x);
    const auto ly = local(y);
    const auto lmeet = static_cast<Vertex>(std::lower_bound(ground.begin(), ground.end(), *meet) - ground.begin());

    std::vector<Vertex> perm(ground.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    do {
        ++total;
        if (separates_at(Ordering::from_sequence(perm, perm.size()), lx, ly, lmeet))
            ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(hits, total);
}

Rational exact_mean_separated(const Hypergraph& h, std::size_t vertex_budget, unsigned threads)
{
    const std::size_t p = h.vertex_count();
    if (p > vertex_budget)
        throw Error(ErrorKind::BudgetExceeded, "enumerating " + std::to_string(p) +
                                                   "! orderings exceeds the vertex budget of " +
                                                   std::to_string(vertex_budget));
    const auto pairs = enumerate_simple_pairs(h);
    if (p == 0)
        return Rational(0);

    // Partition by the first vertex of the ordering; each worker enumerates
    // the permutations of the remaining p-1 vertices.
    std::vector<std::uint64_t> partial(p, 0);
    parallel_chunks(p, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t head = begin; head < end; ++head) {
            std::vector<Vertex> seq;
            seq.push_back(static_cast<Vertex>(head));
            for (Vertex v = 0; v < p; ++v)
                if (v != head)
                    seq.push_back(v);
            std::uint64_t sum = 0;
            do {
                sum += count_separated(h, pairs, Ordering::from_sequence(seq, p));
            } while (std::next_permutation(seq.begin() + 1, seq.end()));
            partial[head] = sum;
        }
    });
    const BigInt total = std::accumulate(partial.begin(), partial.end(), BigInt(0),
                                         [](const BigInt& a, std::uint64_t b) { return a + b; });
    return Rational(total, factorial(p));
}

SeparationStats monte_carlo_separation(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads)
{
    if (trials == 0)
        throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    const auto pairs = enumerate_simple_pairs(h);
    const unsigned workers = resolve_threads(threads);
    std::vector<std::map<std::uint64_t, std::uint64_t>> local(workers);
    parallel_chunks(trials, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& hist = local[w];
        for (std::size_t t = begin; t < end; ++t) {
            auto rng = stream_for(seed, t);
            ++hist[count_separated(h, pairs, random_ordering(h.vertex_count(), rng))];
        }
    });

    SeparationStats s;
    s.trials = trials;
    for (const auto& hist : local)
        for (auto [k, f] : hist)
            s.histogram[k] += f;

    BigInt sum = 0;
    for (auto [k, f] : s.histogram)
        sum += BigInt(k) * f;
    s.mean_separated = Rational(sum, trials);
    s.mean = static_cast<double>(s.mean_separated);

    double ss = 0.0;
    for (auto [k, f] : s.histogram) {
        const double d = static_cast<double>(k) - s.mean;
        ss += d * d * static_cast<double>(f);
    }
    s.variance = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;
    s.standard_error = std::sqrt(s.variance / static_cast<double>(trials));
    const auto zero = s.histogram.find(0);
    s.success_rate = zero == s.histogram.end() ? 0.0
                                               : static_cast<double>(zero->second) / static_cast<double>(trials);
    return s;
}

} // namespace propb
