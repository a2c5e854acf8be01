#include "bicliq/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bicliq {

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const VertexOrdering& sigma) {
    if (!is_peo(g, sigma)) throw std::invalid_argument("maximal_cliques_chordal: not a PEO");
    const int n = g.vertex_count();

    std::vector<int> rn_size(n, 0), parent(n, -1);
    for (int v = 0; v < n; ++v) {
        const int pv = sigma.position_of(v);
        for (int u : g.neighbors(v)) {
            if (sigma.position_of(u) > pv) {
                ++rn_size[v];
                if (parent[v] == -1 || sigma.position_of(u) < sigma.position_of(parent[v]))
                    parent[v] = u;
            }
        }
    }

    // candidate {v} u RN(v) is swallowed by its child's candidate exactly
    // when the child has one more later-neighbor than v
    std::vector<char> covered(n, 0);
    for (int v = 0; v < n; ++v)
        if (parent[v] != -1 && rn_size[v] == rn_size[parent[v]] + 1) covered[parent[v]] = 1;

    std::vector<VertexSet> cliques;
    for (int pos = 0; pos < n; ++pos) {
        const int v = sigma.vertex_at(pos);
        if (covered[v]) continue;
        std::vector<int> members{v};
        for (int u : g.neighbors(v))
            if (sigma.position_of(u) > pos) members.push_back(u);
        cliques.emplace_back(std::move(members));
    }
    return cliques;
}

int count_maximal_cliques(const Graph& g) {
    auto res = is_chordal(g);
    if (!res.chordal) throw std::invalid_argument("count_maximal_cliques: graph is not chordal");
    return static_cast<int>(maximal_cliques_chordal(g, *res.peo).size());
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

CliqueTree build_clique_tree(const Graph& g) {
    auto res = is_chordal(g);
    if (!res.chordal) throw std::invalid_argument("build_clique_tree: graph is not chordal");

    CliqueTree t;
    t.nodes = maximal_cliques_chordal(g, *res.peo);
    const int k = static_cast<int>(t.nodes.size());
    if (k <= 1) return t;

    struct Candidate {
        int weight;
        int a;
        int b;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            candidates.push_back(
                {VertexSet::set_intersection(t.nodes[a], t.nodes[b]).size(), a, b});

    // stable sort keeps enumeration order among equal weights
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });

    DisjointSet ds(k);
    for (const auto& c : candidates) {
        if (static_cast<int>(t.edges.size()) == k - 1) break;
        if (ds.unite(c.a, c.b))
            t.edges.push_back({c.a, c.b, VertexSet::set_intersection(t.nodes[c.a], t.nodes[c.b])});
    }
    return t;
}

bool verify_clique_tree(const Graph& g, const CliqueTree& t, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    auto chord = is_chordal(g);
    if (!chord.chordal) return fail("graph is not chordal");

    auto expected = maximal_cliques_chordal(g, *chord.peo);
    if (expected.size() != t.nodes.size())
        return fail("node count differs from maximal clique count");
    {
        auto key = [](const VertexSet& s) { return s.ids(); };
        std::vector<std::vector<int>> a, b;
        for (const auto& s : expected) a.push_back(key(s));
        for (const auto& s : t.nodes) b.push_back(key(s));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return fail("nodes are not the maximal cliques of the graph");
    }

    const int k = static_cast<int>(t.nodes.size());
    if (static_cast<int>(t.edges.size()) != std::max(0, k - 1))
        return fail("edge count is not node count minus one");
    DisjointSet ds(k);
    for (const auto& e : t.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k || e.a == e.b)
            return fail("edge endpoint out of range");
        if (!ds.unite(e.a, e.b)) return fail("edges contain a cycle");
        if (e.mid != VertexSet::set_intersection(t.nodes[e.a], t.nodes[e.b]))
            return fail("edge middle set differs from endpoint intersection");
    }

    // clique-intersection property via induced-subtree connectivity: the
    // nodes containing any one vertex must form a connected subtree
    for (int v = 0; v < g.vertex_count(); ++v) {
        int holding = 0, cross = 0;
        for (const auto& node : t.nodes)
            if (node.contains(v)) ++holding;
        for (const auto& e : t.edges)
            if (e.mid.contains(v)) ++cross;
        if (holding == 0) return fail("vertex missing from every node");
        // a forest on `holding` nodes is connected iff it has holding-1 edges
        if (cross != holding - 1) return fail("vertex " + std::to_string(v) +
                                              " does not induce a connected subtree");
    }
    return true;
}

bool is_clique_vertex_irreducible(const Graph& g) {
    auto res = is_chordal(g);
    if (!res.chordal)
        throw std::invalid_argument("is_clique_vertex_irreducible: graph is not chordal");
    auto cliques = maximal_cliques_chordal(g, *res.peo);

    std::vector<int> membership(g.vertex_count(), 0);
    for (const auto& c : cliques)
        for (int v : c) ++membership[v];
    for (const auto& c : cliques) {
        bool has_private = false;
        for (int v : c)
            if (membership[v] == 1) {
                has_private = true;
                break;
            }
        if (!has_private) return false;
    }
    return true;
}

std::optional<SplitPartition> is_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    // Hammer-Simeone: with degrees d1 >= ... >= dn and
    // h = max{i : d_i >= i-1}, the graph is split iff
    // sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i.
    long long head = 0, tail = 0;
    int h = 0;
    for (int i = 0; i < n; ++i) {
        const int d = g.degree(by_degree[i]);
        if (d >= i) {
            ++h;
            head += d;
        } else {
            tail += d;
        }
    }
    if (head != static_cast<long long>(h) * (h - 1) + tail) return std::nullopt;

    SplitPartition part;
    part.clique_side = VertexSet(std::vector<int>(by_degree.begin(), by_degree.begin() + h));
    part.independent_side = VertexSet(std::vector<int>(by_degree.begin() + h, by_degree.end()));
    if (!is_clique(g, part.clique_side) || !is_independent_set(g, part.independent_side))
        throw std::logic_error("is_split: degree test witness failed verification");
    return part;
}

VertexSet max_independent_set_chordal(const Graph& g, const VertexOrdering& sigma) {
    if (!is_peo(g, sigma)) throw std::invalid_argument("max_independent_set_chordal: not a PEO");
    std::vector<char> taken(g.vertex_count(), 0);
    std::vector<int> picked;
    for (int pos = 0; pos < sigma.size(); ++pos) {
        const int v = sigma.vertex_at(pos);
        bool blocked = false;
        for (int u : g.neighbors(v))
            if (taken[u]) {
                blocked = true;
                break;
            }
        if (!blocked) {
            taken[v] = 1;
            picked.push_back(v);
        }
    }
    return VertexSet(std::move(picked));
}

} // namespace bicliq
