#include "propb/analysis.hpp"

namespace propb {

AnalysisReport analyze(const Hypergraph& h, std::size_t vertex_budget)
{
    AnalysisReport r;
    r.m2 = m2(h);
    r.bound = bound(h.uniformity());
    r.meets_bound_exactly = BigInt(r.m2) == r.bound;
    r.seymour_ok = seymour_check(h);

    auto decision = exhaustive_decide(h, vertex_budget);
    r.colorable = decision.verdict;
    r.proper_coloring = std::move(decision.coloring);

    const auto selection = build_M(h);
    r.selection_size = selection.size();
    r.bollobas = evaluate_family(bollobas_family(h, selection));

    if (r.colorable == Colorability::No)
        r.critical_seymour_ok = critical_seymour_check(h, vertex_budget);
    if (r.colorable == Colorability::No && r.meets_bound_exactly)
        r.clique_witness = find_clique(h);
    return r;
}

} // namespace propb
