#pragma once

#include "bicliq/graph.hpp"
#include "bicliq/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bicliq {

/// Caps for the exact solver. The edge cap guards against accidental huge
/// inputs (raise it with ignore_edge_cap); max_work bounds the search by
/// counting node expansions and generated candidates.
struct OracleBudget {
    std::uint64_t max_work = 5'000'000;
    int edge_cap = 18;
    bool ignore_edge_cap = false;
};

struct OracleResult {
    int size = 0;
    BicliquePartition witness;
    bool complete = true; // false when the work budget ran out
    std::uint64_t work = 0;
};

/// Exact minimum biclique partition by branch and bound: branch on the
/// lexicographically smallest uncovered edge, enumerate every biclique
/// containing it whose edges are all uncovered (larger candidates tried
/// first), prune when the part count reaches the incumbent. When the
/// budget runs out the best partition found so far is returned with
/// complete=false. Throws std::invalid_argument when the edge count
/// exceeds the cap (or the hard limit of 32).
OracleResult exact_biclique_partition(const Graph& g, const OracleBudget& budget = {});

/// Clique number. Uses the chordal maximum-independent-set of the
/// complement when the graph is co-chordal, otherwise brute force for
/// n <= 12. Throws when neither route applies.
int clique_number(const Graph& g);

/// bp(G) >= omega(G) - 1, clamped at zero.
int lower_bound_omega(const Graph& g);

/// Assembled bound certificate for one graph.
struct BoundsReport {
    struct Bound {
        int value = 0;
        std::string rule;
    };
    std::optional<Bound> lower;
    std::optional<Bound> upper;
    std::optional<int> exact_bp;  // present when the oracle ran to completion
    bool oracle_complete = true;  // false when the oracle ran but hit its budget
    bool exact_by_theory = false; // lower == upper forced by the irreducible complement rule

    bool co_chordal = false;
    bool split = false;
    bool complement_irreducible = false; // complement chordal and clique vertex irreducible
};

/// Bound calculus: upper mc(G^c)-1 when co-chordal; lower is the best of
/// omega-1, the split rule mc(G^c)-2, and — when the complement is chordal
/// and clique vertex irreducible — mc(G^c)-1, which also marks bp as exact.
/// With run_oracle the exact solver fills exact_bp (subject to its caps).
BoundsReport bounds_report(const Graph& g, bool run_oracle, const OracleBudget& budget = {});

/// Test utility: bp of an induced subgraph never exceeds bp of the graph.
/// Runs the oracle on both; throws std::runtime_error if either run is
/// incomplete.
bool bp_monotonicity_check(const Graph& g, const VertexSet& s, const OracleBudget& budget = {});

} // namespace bicliq
