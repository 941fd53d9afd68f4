#include "propb/setpairs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "propb/coloring.hpp"
#include "propb/error.hpp"
#include "propb/separation.hpp"
#include "propb/subsets.hpp"

namespace propb {

namespace {

std::vector<Vertex> set_minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> set_union_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> range_of(std::size_t p)
{
    std::vector<Vertex> all(p);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

} // namespace

std::vector<SimplePair> build_M(const Hypergraph& h)
{
    std::vector<SimplePair> selection;
    for (EdgeIndex y = 0; y < h.edge_count(); ++y) {
        // Edge indices follow canonical order, so the first hit is the
        // canonically smallest X.
        for (EdgeIndex x = 0; x < h.edge_count(); ++x) {
            if (auto meet = h.meet(x, y)) {
                selection.push_back({x, y, *meet});
                break;
            }
        }
    }
    return selection;
}

SetPairFamily bollobas_family(const Hypergraph& h, const std::vector<SimplePair>& selection)
{
    SetPairFamily f;
    f.ground_size = h.vertex_count();
    const auto all = range_of(h.vertex_count());
    for (const auto& s : selection) {
        const auto& x = h.edges().at(s.first);
        const auto& y = h.edges().at(s.second);
        f.members.push_back({set_minus(x, y), set_minus(all, set_union_of(x, y)), s});
    }
    return f;
}

BollobasVerdict check_conditions(const SetPairFamily& f)
{
    BollobasVerdict v;
    const auto& m = f.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<Vertex> common;
        std::set_intersection(m[i].a.begin(), m[i].a.end(), m[i].b.begin(), m[i].b.end(),
                              std::back_inserter(common));
        if (!common.empty())
            v.violations.push_back({ViolationKind::Disjointness, i, i});
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto cover = set_union_of(m[i].a, m[i].b);
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j)
                continue;
            if (std::includes(cover.begin(), cover.end(), m[j].a.begin(), m[j].a.end()))
                v.violations.push_back({ViolationKind::Containment, i, j});
        }
    }
    std::sort(v.violations.begin(), v.violations.end());
    v.conditions_ok = v.violations.empty();
    return v;
}

Rational bollobas_sum(const SetPairFamily& f)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto& s = f.members[i];
        if (s.b.size() > f.ground_size || s.a.size() > f.ground_size - s.b.size())
            throw Error(ErrorKind::DegenerateBinomial,
                        "member " + std::to_string(i) + " has |A| = " + std::to_string(s.a.size()) +
                            " > p - |B| = " + std::to_string(f.ground_size) + " - " + std::to_string(s.b.size()));
        sum += Rational(1, binomial(f.ground_size - s.b.size(), s.a.size()));
    }
    return sum;
}

std::optional<EqualityStructure> detect_equality_structure(const SetPairFamily& f)
{
    if (!check_conditions(f).conditions_ok || bollobas_sum(f) != 1)
        return std::nullopt;

    auto fail = [](const std::string& why) { throw Error(ErrorKind::EqualityStructureViolated, why); };

    const auto& m = f.members;
    EqualityStructure eq;
    eq.common_b = m.front().b;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i].b != eq.common_b)
            fail("B_" + std::to_string(i) + " differs from B_0");
    eq.ground_u = set_minus(range_of(f.ground_size), eq.common_b);
    eq.q = m.front().a.size();

    std::set<std::vector<Vertex>> distinct;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].a.size() != eq.q)
            fail("|A_" + std::to_string(i) + "| differs from |A_0|");
        if (!std::includes(eq.ground_u.begin(), eq.ground_u.end(), m[i].a.begin(), m[i].a.end()))
            fail("A_" + std::to_string(i) + " leaves the ground set minus B");
        distinct.insert(m[i].a);
    }
    if (distinct.size() != m.size() || BigInt(distinct.size()) != binomial(eq.ground_u.size(), eq.q))
        fail("the A_i are not all the q-subsets of the ground set minus B");
    return eq;
}

BollobasVerdict evaluate_family(const SetPairFamily& f)
{
    auto v = check_conditions(f);
    v.sum = bollobas_sum(f);
    if (v.conditions_ok && v.sum == 1) {
        if (auto eq = detect_equality_structure(f)) {
            v.equality = true;
            v.common_b = eq->common_b;
            v.ground_u = eq->ground_u;
        }
    }
    return v;
}

bool is_complete_on(const Hypergraph& h, const std::vector<Vertex>& vertices)
{
    return for_each_subset<Vertex>(vertices, h.uniformity(),
                                   [&](const std::vector<Vertex>& s) { return h.find_edge(s).has_value(); });
}

std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, std::uint64_t subset_budget)
{
    const std::size_t n = h.uniformity();
    const std::size_t k = 2 * n - 1;
    // A vertex of K^n_{2n-1} lies in C(2n-2, n-1) of its edges.
    const BigInt needed = binomial(k - 1, n - 1);
    std::vector<Vertex> candidates;
    for (Vertex v : h.covered_vertices())
        if (BigInt(h.degree(v)) >= needed)
            candidates.push_back(v);

    if (binomial(candidates.size(), k) <= BigInt(subset_budget)) {
        std::optional<std::vector<Vertex>> found;
        for_each_subset<Vertex>(candidates, k, [&](const std::vector<Vertex>& u) {
            if (is_complete_on(h, u)) {
                found = u;
                return false;
            }
            return true;
        });
        return found;
    }

    const auto verdict = evaluate_family(bollobas_family(h, build_M(h)));
    if (verdict.equality && verdict.ground_u->size() == k && is_complete_on(h, *verdict.ground_u))
        return verdict.ground_u;
    throw Error(ErrorKind::BudgetExceeded, "clique search over " + std::to_string(candidates.size()) +
                                               " candidate vertices exceeds the subset budget and the "
                                               "set-pair equality structure gives no clique");
}

std::vector<SharedMeetViolation> check_distinct_meets(const Hypergraph& h)
{
    std::vector<SharedMeetViolation> out;
    std::map<std::pair<EdgeIndex, Vertex>, std::vector<EdgeIndex>> by_meet;
    for (const auto& s : enumerate_simple_pairs(h))
        by_meet[{s.second, s.meet}].push_back(s.first);
    for (const auto& [key, firsts] : by_meet)
        for (std::size_t i = 0; i < firsts.size(); ++i)
            for (std::size_t j = i + 1; j < firsts.size(); ++j)
                out.push_back({key.first, firsts[i], firsts[j], key.second});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiSeparationViolation> check_single_separation(const Hypergraph& h, std::size_t vertex_budget)
{
    const std::size_t p = h.vertex_count();
    if (p > vertex_budget)
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(p) + "! orderings exceed the vertex budget of " + std::to_string(vertex_budget));
    const auto pairs = enumerate_simple_pairs(h);
    std::vector<MultiSeparationViolation> out;
    auto seq = range_of(p);
    do {
        const auto count = count_separated(h, pairs, Ordering::from_sequence(seq, p));
        if (count > 1)
            out.push_back({seq, count});
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

} // namespace propb
