#pragma once

#include "bicliq/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bicliq {

/// An unordered pair {L, R} of disjoint vertex sets; its edge set is L x R.
/// Sides may be empty transiently, but a partition stores nonempty sides
/// only (enforced by verify_partition).
struct Biclique {
    VertexSet left;
    VertexSet right;

    /// Unordered-pair equality.
    friend bool operator==(const Biclique& a, const Biclique& b) {
        return (a.left == b.left && a.right == b.right) ||
               (a.left == b.right && a.right == b.left);
    }

    /// Cross edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Same biclique with the side containing the smallest vertex first.
    Biclique canonical() const;
};

/// Ordered collection of bicliques meant to partition a graph's edges.
struct BicliquePartition {
    std::vector<Biclique> parts;

    int size() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const BicliquePartition&, const BicliquePartition&) = default;
};

/// True iff left and right are disjoint and every cross pair is an edge of g.
bool is_biclique_subgraph(const Graph& g, const Biclique& b);

/// True iff b is a biclique subgraph of g and the leftover vertices
/// V \ (L u R) form an independent set, so that {L,R}, G(V\L), G(V\R)
/// partition E(g).
bool is_partitioned_biclique(const Graph& g, const Biclique& b);

struct PartitionVerdict {
    bool pass = false;
    std::string message; // first violation when !pass

    explicit operator bool() const { return pass; }
};

/// PASS iff every part is a biclique subgraph of g with nonempty sides,
/// the parts' edge sets are pairwise disjoint, and their union is E(g).
/// On FAIL the message names the first violating part or edge.
PartitionVerdict verify_partition(const Graph& g, const BicliquePartition& p);

/// The three-way edge split induced by a biclique subgraph: cross edges
/// L x R, edges of G(V \ L), and edges of G(V \ R). Their union is always
/// E(g); they are pairwise disjoint exactly when b is a partitioned
/// biclique. Throws unless b is a biclique subgraph of g.
struct EdgeDecomposition {
    std::vector<std::pair<int, int>> cross;
    std::vector<std::pair<int, int>> without_left;
    std::vector<std::pair<int, int>> without_right;
};
EdgeDecomposition decomposition_edges(const Graph& g, const Biclique& b);

} // namespace bicliq
