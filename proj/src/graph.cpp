#include "bicliq/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bicliq {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet VertexSet::set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) os << ' ';
        os << ids_[i];
    }
    os << '}';
    return os.str();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        std::size_t k = 0;
        for (int v = u + 1; v < n; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (k < nbrs.size() && nbrs[k] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

static void check_in_range(const Graph& g, const VertexSet& s) {
    if (!s.empty() && (s.ids().front() < 0 || s.ids().back() >= g.vertex_count()))
        throw std::invalid_argument("vertex set: id out of range");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_in_range(g, s);
    std::vector<int> new_id(g.vertex_count(), -1);
    std::vector<int> original(s.begin(), s.end());
    for (std::size_t i = 0; i < original.size(); ++i) new_id[original[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int u : s)
        for (int v : g.neighbors(u))
            if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return {Graph::from_edges(s.size(), edges), std::move(original)};
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    check_in_range(g, s);
    for (int u : s)
        for (int v : g.neighbors(u))
            if (v > u && s.contains(v)) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    check_in_range(g, s);
    for (int u : s)
        for (int v : s)
            if (v > u && !g.has_edge(u, v)) return false;
    return true;
}

} // namespace bicliq
