#pragma once

#include "bicliq/graph.hpp"

#include <optional>
#include <vector>

namespace bicliq {

/// A bijection between positions 0..n-1 and vertex ids.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Throws std::invalid_argument unless order is a permutation of 0..n-1.
    explicit VertexOrdering(std::vector<int> order);

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int pos) const { return order_[pos]; }
    int position_of(int v) const { return inverse_[v]; }
    const std::vector<int>& order() const { return order_; }

    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

private:
    std::vector<int> order_;
    std::vector<int> inverse_;
};

/// Lexicographic breadth-first search from `start`, implemented with
/// partition refinement in O(n + m). Label classes are kept as an ordered
/// list of buckets; ties (several vertices with the maximal label) are
/// broken toward the smallest vertex id, which also covers the jump to a
/// new component of a disconnected graph. Deterministic.
VertexOrdering lexbfs(const Graph& g, int start);

/// True iff sigma is a perfect elimination ordering of g: every vertex's
/// later neighbors form a clique. Uses the parent check: for each v with
/// nonempty RN(v), the earliest later neighbor p must satisfy
/// RN(v) \ {p} subset-of N(p).
bool is_peo(const Graph& g, const VertexOrdering& sigma);

struct ChordalityResult {
    bool chordal = false;
    std::optional<VertexOrdering> peo; // present iff chordal
};

/// Chordality via reverse LexBFS: runs lexbfs from vertex 0, reverses, and
/// checks is_peo. The returned ordering, when present, is a PEO of g.
ChordalityResult is_chordal(const Graph& g);

/// Brute-force search for an induced cycle of length >= 4, for n <= 12.
/// Returns the cycle's vertices in cyclic order, or nullopt if none exists
/// (or n > 12). Used to produce non-chordality certificates.
std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g);

} // namespace bicliq
