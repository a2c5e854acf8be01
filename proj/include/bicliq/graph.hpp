#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bicliq {

/// A set of vertex ids, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    VertexSet(std::initializer_list<int> ids);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    void insert(int v);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    static VertexSet set_union(const VertexSet& a, const VertexSet& b);
    static VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
    static VertexSet set_difference(const VertexSet& a, const VertexSet& b);

    std::string to_string() const;

private:
    std::vector<int> ids_;
};

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Neighbor lists are sorted, symmetric, and free of self-loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    /// Builds from an edge list. Throws std::invalid_argument on self-loops,
    /// out-of-range endpoints, or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Graph whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

/// Subgraph induced by s, on relabeled vertices 0..|s|-1. The second member
/// maps each new id to its original id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id; // new id -> original id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// True iff no edge of g joins two members of s. Empty and singleton sets
/// are independent.
bool is_independent_set(const Graph& g, const VertexSet& s);

/// True iff every pair of members of s is adjacent. Empty and singleton
/// sets are cliques.
bool is_clique(const Graph& g, const VertexSet& s);

} // namespace bicliq
