#pragma once

#include "bicliq/graph.hpp"
#include "bicliq/ordering.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bicliq {

/// Tree on the maximal cliques of a chordal graph. Each edge carries the
/// middle set, the intersection of its two endpoint cliques. A valid tree
/// satisfies the clique-intersection property: for any two nodes, every
/// node on the path between them contains their intersection.
struct CliqueTree {
    struct Edge {
        int a;
        int b;
        VertexSet mid;
    };
    std::vector<VertexSet> nodes;
    std::vector<Edge> edges;
};

/// The maximal cliques of a chordal graph, from a perfect elimination
/// ordering: each clique is {v} u RN(v) for the unique sigma-first vertex v
/// of that clique. A candidate is dropped when it is contained in an
/// earlier candidate, detected by the parent size test
/// |RN(child)| == |RN(parent)| + 1. Cliques are emitted in sigma order of
/// their first vertex. Throws if sigma is not a PEO of g.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const VertexOrdering& sigma);

/// Number of maximal cliques of a chordal graph. Throws on non-chordal input.
int count_maximal_cliques(const Graph& g);

/// Clique tree construction: maximum-weight spanning tree of the
/// clique-intersection graph, weight |Ki n Kj|, Kruskal with ties broken by
/// pair enumeration order. Deterministic. Throws on non-chordal input.
CliqueTree build_clique_tree(const Graph& g);

/// Full validity check of t against g: nodes are exactly the maximal
/// cliques of g, edges form a tree with mid = endpoint intersection, and
/// for every vertex the nodes containing it induce a connected subtree.
/// Returns false (never throws) on malformed input; `why`, when non-null,
/// receives a diagnostic.
bool verify_clique_tree(const Graph& g, const CliqueTree& t, std::string* why = nullptr);

/// True iff every maximal clique of a chordal graph owns a vertex that lies
/// in no other maximal clique. Throws on non-chordal input.
bool is_clique_vertex_irreducible(const Graph& g);

struct SplitPartition {
    VertexSet clique_side;
    VertexSet independent_side;
};

/// Split-graph recognition via the degree-sequence characterization, with
/// the witness rebuilt from the top-degree prefix and verified before
/// returning.
std::optional<SplitPartition> is_split(const Graph& g);

/// Maximum independent set of a chordal graph: greedy scan of a PEO,
/// keeping each vertex with no earlier-kept neighbor. Throws if sigma is
/// not a PEO of g.
VertexSet max_independent_set_chordal(const Graph& g, const VertexOrdering& sigma);

} // namespace bicliq
