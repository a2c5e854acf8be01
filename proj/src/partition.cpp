#include "bicliq/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicliq {

std::vector<std::pair<int, int>> Biclique::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(left.size()) * right.size());
    for (int u : left)
        for (int v : right) out.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

Biclique Biclique::canonical() const {
    if (left.empty() || right.empty()) return left.empty() ? Biclique{right, left} : *this;
    if (left.ids().front() <= right.ids().front()) return *this;
    return {right, left};
}

bool is_biclique_subgraph(const Graph& g, const Biclique& b) {
    if (!VertexSet::set_intersection(b.left, b.right).empty()) return false;
    for (int u : b.left) {
        if (u < 0 || u >= g.vertex_count())
            throw std::invalid_argument("biclique: vertex out of range");
        for (int v : b.right) {
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("biclique: vertex out of range");
            if (!g.has_edge(u, v)) return false;
        }
    }
    for (int v : b.right)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("biclique: vertex out of range");
    return true;
}

bool is_partitioned_biclique(const Graph& g, const Biclique& b) {
    if (!is_biclique_subgraph(g, b)) return false;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    VertexSet leftover = VertexSet::set_difference(
        VertexSet(std::move(all)), VertexSet::set_union(b.left, b.right));
    return is_independent_set(g, leftover);
}

PartitionVerdict verify_partition(const Graph& g, const BicliquePartition& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const Biclique& b = p.parts[i];
        if (b.left.empty() || b.right.empty())
            return {false, "part " + std::to_string(i) + " has an empty side"};
        if (!is_biclique_subgraph(g, b))
            return {false, "part " + std::to_string(i) + " is not a biclique subgraph"};
    }

    std::vector<std::vector<char>> covered(g.vertex_count(),
                                           std::vector<char>(g.vertex_count(), 0));
    for (const Biclique& b : p.parts) {
        for (auto [u, v] : b.edges()) {
            if (covered[u][v])
                return {false,
                        "duplicate edge " + std::to_string(u) + " " + std::to_string(v)};
            covered[u][v] = covered[v][u] = 1;
        }
    }
    for (auto [u, v] : g.edges())
        if (!covered[u][v])
            return {false, "uncovered edge " + std::to_string(u) + " " + std::to_string(v)};
    return {true, ""};
}

EdgeDecomposition decomposition_edges(const Graph& g, const Biclique& b) {
    if (!is_biclique_subgraph(g, b))
        throw std::invalid_argument("decomposition_edges: not a biclique subgraph");

    EdgeDecomposition d;
    d.cross = b.edges();
    for (auto [u, v] : g.edges()) {
        if (!b.left.contains(u) && !b.left.contains(v)) d.without_left.emplace_back(u, v);
        if (!b.right.contains(u) && !b.right.contains(v)) d.without_right.emplace_back(u, v);
    }
    return d;
}

} // namespace bicliq
