#include "bicliq/heuristics.hpp"

#include "bicliq/ordering.hpp"
#include "bicliq/prng.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicliq {

namespace {

void validate_tree(const CliqueTree& t) {
    const int k = static_cast<int>(t.nodes.size());
    if (static_cast<int>(t.edges.size()) != std::max(0, k - 1))
        throw std::invalid_argument("clique tree: edge count is not node count minus one");
    std::vector<int> comp(k);
    for (int i = 0; i < k; ++i) comp[i] = i;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : t.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k || e.a == e.b)
            throw std::invalid_argument("clique tree: edge endpoint out of range");
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) throw std::invalid_argument("clique tree: edges contain a cycle");
        comp[rb] = ra;
        if (e.mid != VertexSet::set_intersection(t.nodes[e.a], t.nodes[e.b]))
            throw std::invalid_argument("clique tree: middle set mismatch");
    }
}

struct TreeSplitter {
    const CliqueTree& t;
    SplitMix64 rng;
    bool random_choice;
    BicliquePartition out;
    std::vector<VertexSet>* trace;

    // node -> incident alive edge indices, rebuilt per recursion from the
    // alive edge subset (cheap at desk scale, keeps subtrees implicit)
    void recurse(const std::vector<int>& nodes, const std::vector<int>& edges) {
        if (nodes.size() <= 1) return;

        std::size_t pick = 0;
        if (random_choice) pick = rng.next_below(edges.size());
        const int cut = edges[pick];
        const auto& e = t.edges[cut];

        // components of the cut tree, found from e.a's side
        std::vector<char> side_a(t.nodes.size(), 0);
        std::vector<int> stack{e.a};
        side_a[e.a] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int ei : edges) {
                if (ei == cut) continue;
                const auto& f = t.edges[ei];
                int nxt = -1;
                if (f.a == cur)
                    nxt = f.b;
                else if (f.b == cur)
                    nxt = f.a;
                if (nxt >= 0 && !side_a[nxt]) {
                    side_a[nxt] = 1;
                    stack.push_back(nxt);
                }
            }
        }

        std::vector<int> nodes_a, nodes_b, edges_a, edges_b;
        VertexSet union_a, union_b;
        for (int nd : nodes) {
            if (side_a[nd]) {
                nodes_a.push_back(nd);
                union_a = VertexSet::set_union(union_a, t.nodes[nd]);
            } else {
                nodes_b.push_back(nd);
                union_b = VertexSet::set_union(union_b, t.nodes[nd]);
            }
        }
        for (int ei : edges) {
            if (ei == cut) continue;
            // a non-cut alive edge never crosses the cut
            if (side_a[t.edges[ei].a])
                edges_a.push_back(ei);
            else
                edges_b.push_back(ei);
        }

        Biclique part{VertexSet::set_difference(union_a, e.mid),
                      VertexSet::set_difference(union_b, e.mid)};
        out.parts.push_back(part);
        if (trace) trace->push_back(VertexSet::set_union(union_a, union_b));

        recurse(nodes_a, edges_a);
        recurse(nodes_b, edges_b);
    }
};

} // namespace

BicliquePartition partition_via_clique_tree(const CliqueTree& t,
                                            const EdgeChoiceStrategy& strategy,
                                            std::vector<VertexSet>* residual_trace) {
    validate_tree(t);
    TreeSplitter splitter{t, SplitMix64(strategy.seed),
                          strategy.kind == EdgeChoiceStrategy::Kind::Random,
                          BicliquePartition{}, residual_trace};
    std::vector<int> nodes(t.nodes.size()), edges(t.edges.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = static_cast<int>(i);
    splitter.recurse(nodes, edges);
    return std::move(splitter.out);
}

namespace {

NotCoChordalError make_not_co_chordal(const Graph& complement_graph) {
    auto cycle = find_induced_long_cycle(complement_graph);
    std::optional<std::vector<int>> order;
    if (!cycle) order = lexbfs(complement_graph, 0).reversed().order();
    return NotCoChordalError("graph is not co-chordal: complement has no perfect elimination "
                             "ordering",
                             std::move(cycle), std::move(order));
}

} // namespace

BicliquePartition partition_via_lexbfs(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("partition_via_lexbfs: empty graph");
    Graph gc = complement(g);
    auto chord = is_chordal(gc);
    if (!chord.chordal) throw make_not_co_chordal(gc);
    const VertexOrdering& sigma = *chord.peo;

    // S and the shrinking complement share one alive mask: both lose
    // exactly R each round
    std::vector<char> alive(n, 1), in_left(n, 0);
    int first_pos = 0;
    BicliquePartition bp;
    int remaining = n;
    while (remaining > 0) {
        while (!alive[sigma.vertex_at(first_pos)]) ++first_pos;
        const int v = sigma.vertex_at(first_pos);

        std::vector<int> left;
        {
            std::vector<char> drop(n, 0);
            drop[v] = 1;
            for (int u : gc.neighbors(v))
                if (alive[u]) drop[u] = 1;
            for (int u = 0; u < n; ++u)
                if (alive[u] && !drop[u]) {
                    left.push_back(u);
                    in_left[u] = 1;
                }
        }

        std::vector<int> right{v};
        for (int u : gc.neighbors(v)) {
            if (!alive[u]) continue;
            bool touches_left = false;
            for (int w : gc.neighbors(u))
                if (alive[w] && in_left[w]) {
                    touches_left = true;
                    break;
                }
            if (!touches_left) right.push_back(u);
        }

        if (!left.empty())
            bp.parts.push_back({VertexSet(left), VertexSet(right)});

        for (int u : right) {
            alive[u] = 0;
            --remaining;
        }
        for (int u : left) in_left[u] = 0;
    }
    return bp;
}

AutoPartitionResult partition_auto(const Graph& g, PartitionMethod method,
                                   const EdgeChoiceStrategy& strategy) {
    if (g.vertex_count() == 0) throw std::invalid_argument("partition_auto: empty graph");
    Graph gc = complement(g);
    auto chord = is_chordal(gc);
    if (!chord.chordal) throw make_not_co_chordal(gc);

    AutoPartitionResult res;
    res.complement_clique_count =
        static_cast<int>(maximal_cliques_chordal(gc, *chord.peo).size());
    if (method == PartitionMethod::LexBfs) {
        res.partition = partition_via_lexbfs(g);
    } else {
        res.partition = partition_via_clique_tree(build_clique_tree(gc), strategy);
    }
    return res;
}

} // namespace bicliq
