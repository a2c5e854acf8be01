#pragma once

#include "bicliq/cliques.hpp"
#include "bicliq/graph.hpp"
#include "bicliq/partition.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bicliq {

/// Pins down the free edge choice of the clique-tree recursion: either the
/// alive edge with the smallest index, or a seeded uniform pick.
struct EdgeChoiceStrategy {
    enum class Kind { FirstCanonical, Random };
    Kind kind = Kind::FirstCanonical;
    std::uint64_t seed = 0;

    static EdgeChoiceStrategy first() { return {}; }
    static EdgeChoiceStrategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

/// Raised when an input graph's complement is not chordal. Carries an
/// induced cycle of length >= 4 of the complement when one was found
/// (small graphs), otherwise the rejected elimination ordering.
class NotCoChordalError : public std::runtime_error {
public:
    NotCoChordalError(std::string msg, std::optional<std::vector<int>> cycle,
                      std::optional<std::vector<int>> order)
        : std::runtime_error(std::move(msg)),
          induced_cycle(std::move(cycle)),
          rejected_order(std::move(order)) {}

    std::optional<std::vector<int>> induced_cycle;  // cyclic vertex order in G^c
    std::optional<std::vector<int>> rejected_order; // the ordering that failed the PEO test
};

/// Recursive clique-tree splitting. t must be a clique tree of some chordal
/// graph H; the result is a biclique partition of complement(H) with
/// exactly |nodes| - 1 parts. Each recursion cuts one tree edge e and emits
/// {L, R} where L and R collect the vertices of the two subtrees minus
/// mid(e); parts are emitted in preorder (cut before both subtrees).
/// `residual_trace`, when non-null, receives for each part the vertex set
/// of the subtree that produced it (the residual graph of that recursion
/// level). Throws std::invalid_argument on malformed trees.
BicliquePartition partition_via_clique_tree(const CliqueTree& t,
                                            const EdgeChoiceStrategy& strategy,
                                            std::vector<VertexSet>* residual_trace = nullptr);

/// PEO-sweep heuristic. Requires complement(g) chordal (throws
/// NotCoChordalError otherwise) and returns a biclique partition of g with
/// exactly mc(G^c) - 1 parts in O(|V| (|V| + |E^c|)) time.
BicliquePartition partition_via_lexbfs(const Graph& g);

enum class PartitionMethod { CliqueTree, LexBfs };

struct AutoPartitionResult {
    BicliquePartition partition;
    int complement_clique_count = 0; // mc(G^c)
};

/// Front door: checks co-chordality, dispatches to the chosen heuristic,
/// and reports mc(G^c). Throws NotCoChordalError with a certificate when
/// the complement is not chordal.
AutoPartitionResult partition_auto(const Graph& g, PartitionMethod method,
                                   const EdgeChoiceStrategy& strategy = {});

} // namespace bicliq
