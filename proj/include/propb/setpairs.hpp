#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "propb/exact.hpp"
#include "propb/hypergraph.hpp"

namespace propb {

struct SetPair {
    std::vector<Vertex> a; // sorted
    std::vector<Vertex> b; // sorted
    std::optional<SimplePair> source;
};

/// Indexed (A_i, B_i) pairs over the ground set 0..ground_size-1.
struct SetPairFamily {
    std::size_t ground_size = 0;
    std::vector<SetPair> members;
};

enum class ViolationKind { Disjointness, Containment };

/// Disjointness: A_i ∩ B_i ≠ ∅ (first == second == i).
/// Containment: A_second ⊆ A_first ∪ B_first.
struct ConditionViolation {
    ViolationKind kind;
    std::size_t first;
    std::size_t second;

    auto operator<=>(const ConditionViolation&) const = default;
};

struct EqualityStructure {
    std::vector<Vertex> common_b;
    std::vector<Vertex> ground_u;
    std::size_t q = 0;
};

struct BollobasVerdict {
    bool conditions_ok = false;
    std::vector<ConditionViolation> violations;
    Rational sum;
    bool equality = false;
    std::optional<std::vector<Vertex>> common_b;
    std::optional<std::vector<Vertex>> ground_u;
};

/// One simple pair per distinct second edge Y, choosing the canonically
/// smallest first edge X. Sorted by Y.
std::vector<SimplePair> build_M(const Hypergraph& h);

/// A = X \ Y and B = V \ (X ∪ Y) for each selected pair.
SetPairFamily bollobas_family(const Hypergraph& h, const std::vector<SimplePair>& selection);

/// Both cross-intersection conditions, checked pairwise. Violations are
/// sorted; the verdict's sum/equality fields are left empty.
BollobasVerdict check_conditions(const SetPairFamily& f);

/// Exact Σ 1 / C(p - |B_i|, |A_i|).
/// Throws DegenerateBinomial when some |A_i| > p - |B_i|.
Rational bollobas_sum(const SetPairFamily& f);

/// When the conditions hold and the sum is exactly 1, returns the common B,
/// U = ground \ B, and q, after confirming the A_i are all q-subsets of U.
/// Returns nullopt when that precondition fails. Throws
/// EqualityStructureViolated if the precondition holds but the structure
/// does not (impossible for a correct condition check).
std::optional<EqualityStructure> detect_equality_structure(const SetPairFamily& f);

/// Conditions, sum and equality structure together.
BollobasVerdict evaluate_family(const SetPairFamily& f);

inline constexpr std::uint64_t kCliqueSubsetBudget = 10'000'000;

/// Canonically smallest (2n-1)-set of covered vertices all of whose n-subsets
/// are edges. Brute force is capped at `subset_budget` candidates; beyond
/// that the set-pair equality structure is tried, and BudgetExceeded is
/// thrown if it does not produce a clique.
std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, std::uint64_t subset_budget = kCliqueSubsetBudget);

/// True iff every n-subset of `vertices` is an edge of h.
bool is_complete_on(const Hypergraph& h, const std::vector<Vertex>& vertices);

/// Two simple pairs (X, Y) and (X', Y) meeting Y in the same vertex.
struct SharedMeetViolation {
    EdgeIndex second;
    EdgeIndex first_a;
    EdgeIndex first_b;
    Vertex meet;

    auto operator<=>(const SharedMeetViolation&) const = default;
};

/// For each Y, the meets of the simple pairs (·, Y) must be distinct on an
/// extremal non-colorable hypergraph. Returns every collision found.
std::vector<SharedMeetViolation> check_distinct_meets(const Hypergraph& h);

struct MultiSeparationViolation {
    std::vector<Vertex> ordering;
    std::uint64_t separated = 0;
};

/// On an extremal non-colorable hypergraph no ordering separates more than
/// one simple pair. Exhausts all p! orderings (p <= vertex_budget) and
/// returns the offending ones. Throws BudgetExceeded.
std::vector<MultiSeparationViolation> check_single_separation(const Hypergraph& h, std::size_t vertex_budget = 8);

} // namespace propb
