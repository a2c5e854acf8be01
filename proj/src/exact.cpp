#include "bicliq/exact.hpp"

#include "bicliq/cliques.hpp"
#include "bicliq/ordering.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bicliq {

namespace {

constexpr int kHardEdgeLimit = 32; // edge and vertex masks are single 64-bit words

struct Candidate {
    std::uint64_t edge_mask;
    std::uint64_t left;
    std::uint64_t right;
};

struct Solver {
    int m = 0;
    int k = 0; // active (non-isolated) vertices, remapped ids
    std::vector<int> active;               // active id -> original id
    std::vector<int> edge_u, edge_v;       // edge index -> active endpoints
    std::vector<std::vector<int>> edge_of; // active pair -> edge index or -1

    std::uint64_t budget = 0;
    std::uint64_t used = 0;
    bool exhausted = false;

    int best = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> best_parts;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack;

    bool spend() {
        if (++used > budget) exhausted = true;
        return !exhausted;
    }

    std::uint64_t edges_between(std::uint64_t left, std::uint64_t right) const {
        std::uint64_t out = 0;
        for (std::uint64_t l = left; l; l &= l - 1) {
            const int a = std::countr_zero(l);
            for (std::uint64_t r = right; r; r &= r - 1)
                out |= 1ULL << edge_of[a][std::countr_zero(r)];
        }
        return out;
    }

    void search(std::uint64_t uncovered, int count) {
        if (!spend()) return;
        if (uncovered == 0) {
            if (count < best) {
                best = count;
                best_parts = stack;
            }
            return;
        }
        if (count + 1 >= best) return;

        const int e0 = std::countr_zero(uncovered);
        const int u = edge_u[e0], v = edge_v[e0];

        std::vector<std::uint64_t> adj(k, 0);
        for (std::uint64_t em = uncovered; em; em &= em - 1) {
            const int e = std::countr_zero(em);
            adj[edge_u[e]] |= 1ULL << edge_v[e];
            adj[edge_v[e]] |= 1ULL << edge_u[e];
        }

        // every biclique covering edge uv: u on the left, v on the right,
        // all cross pairs inside the uncovered set
        std::vector<Candidate> cands;
        const std::uint64_t left_pool = adj[v] & ~(1ULL << u);
        for (std::uint64_t ls = left_pool;; ls = (ls - 1) & left_pool) {
            const std::uint64_t left = ls | (1ULL << u);
            std::uint64_t common = ~0ULL;
            for (std::uint64_t l = left; l; l &= l - 1) common &= adj[std::countr_zero(l)];
            const std::uint64_t right_pool = common & ~(1ULL << v);
            bool out_of_budget = false;
            for (std::uint64_t rs = right_pool;; rs = (rs - 1) & right_pool) {
                if (!spend()) {
                    out_of_budget = true;
                    break;
                }
                const std::uint64_t right = rs | (1ULL << v);
                cands.push_back({edges_between(left, right), left, right});
                if (rs == 0) break;
            }
            if (out_of_budget || ls == 0) break;
        }
        if (exhausted) {
            cands.clear();
            return;
        }

        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            const int pa = std::popcount(a.edge_mask), pb = std::popcount(b.edge_mask);
            if (pa != pb) return pa > pb;
            if (a.left != b.left) return a.left < b.left;
            return a.right < b.right;
        });

        for (const Candidate& c : cands) {
            if (exhausted) return;
            stack.emplace_back(c.left, c.right);
            search(uncovered & ~c.edge_mask, count + 1);
            stack.pop_back();
        }
    }
};

VertexSet mask_to_set(std::uint64_t mask, const std::vector<int>& active) {
    std::vector<int> ids;
    for (; mask; mask &= mask - 1) ids.push_back(active[std::countr_zero(mask)]);
    return VertexSet(std::move(ids));
}

} // namespace

OracleResult exact_biclique_partition(const Graph& g, const OracleBudget& budget) {
    const int m = g.edge_count();
    if (m > budget.edge_cap && !budget.ignore_edge_cap)
        throw std::invalid_argument("exact solver: " + std::to_string(m) +
                                    " edges exceeds cap " + std::to_string(budget.edge_cap) +
                                    " (raise the cap to override)");
    if (m > kHardEdgeLimit)
        throw std::invalid_argument("exact solver: supports at most " +
                                    std::to_string(kHardEdgeLimit) + " edges");

    Solver s;
    s.m = m;
    s.budget = budget.max_work;

    std::vector<int> remap(g.vertex_count(), -1);
    for (auto [u, v] : g.edges()) {
        for (int x : {u, v})
            if (remap[x] < 0) {
                remap[x] = s.k++;
                s.active.push_back(x);
            }
        s.edge_u.push_back(remap[u]);
        s.edge_v.push_back(remap[v]);
    }
    s.edge_of.assign(s.k, std::vector<int>(s.k, -1));
    for (int e = 0; e < m; ++e) {
        s.edge_of[s.edge_u[e]][s.edge_v[e]] = e;
        s.edge_of[s.edge_v[e]][s.edge_u[e]] = e;
    }

    // incumbent: one single-edge biclique per edge
    s.best = m;
    for (int e = 0; e < m; ++e)
        s.best_parts.emplace_back(1ULL << s.edge_u[e], 1ULL << s.edge_v[e]);

    s.search((1ULL << m) - 1, 0);

    OracleResult res;
    res.size = s.best;
    res.complete = !s.exhausted;
    res.work = s.used;
    for (auto [lm, rm] : s.best_parts)
        res.witness.parts.push_back({mask_to_set(lm, s.active), mask_to_set(rm, s.active)});
    return res;
}

int clique_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    Graph gc = complement(g);
    if (auto chord = is_chordal(gc); chord.chordal)
        return max_independent_set_chordal(gc, *chord.peo).size();
    if (n > 12)
        throw std::invalid_argument(
            "clique_number: graph is not co-chordal and too large for brute force");

    std::vector<unsigned> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    int omega = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (unsigned t = s; t && clique; t &= t - 1) {
            const int v = std::countr_zero(t);
            if ((adj[v] & s) != (s & ~(1u << v))) clique = false;
        }
        if (clique) omega = std::max(omega, std::popcount(s));
    }
    return omega;
}

int lower_bound_omega(const Graph& g) { return std::max(clique_number(g) - 1, 0); }

BoundsReport bounds_report(const Graph& g, bool run_oracle, const OracleBudget& budget) {
    BoundsReport rep;
    const int n = g.vertex_count();
    if (n == 0) {
        rep.lower = {0, "empty graph"};
        rep.upper = {0, "empty graph"};
        if (run_oracle) rep.exact_bp = 0;
        return rep;
    }

    Graph gc = complement(g);
    auto chord = is_chordal(gc);
    rep.co_chordal = chord.chordal;
    rep.split = is_split(g).has_value();

    int mc_complement = -1;
    if (rep.co_chordal) {
        mc_complement = static_cast<int>(maximal_cliques_chordal(gc, *chord.peo).size());
        rep.upper = {mc_complement - 1, "mc of complement minus one"};
        rep.complement_irreducible = is_clique_vertex_irreducible(gc);
    }

    auto consider = [&](int value, const std::string& rule) {
        if (!rep.lower || value > rep.lower->value) rep.lower = {value, rule};
    };
    if (rep.split) consider(std::max(mc_complement - 2, 0), "split sandwich");
    if (rep.co_chordal || n <= 12) consider(lower_bound_omega(g), "clique number minus one");
    if (rep.complement_irreducible) {
        consider(mc_complement - 1, "irreducible complement");
        if (rep.lower->value == mc_complement - 1)
            rep.lower->rule = "irreducible complement";
        rep.exact_by_theory = true;
    }

    if (run_oracle) {
        OracleResult oracle = exact_biclique_partition(g, budget);
        rep.oracle_complete = oracle.complete;
        if (oracle.complete) rep.exact_bp = oracle.size;
    }
    return rep;
}

bool bp_monotonicity_check(const Graph& g, const VertexSet& s, const OracleBudget& budget) {
    OracleResult whole = exact_biclique_partition(g, budget);
    OracleResult sub = exact_biclique_partition(induced_subgraph(g, s).graph, budget);
    if (!whole.complete || !sub.complete)
        throw std::runtime_error("bp_monotonicity_check: oracle budget exceeded");
    return sub.size <= whole.size;
}

} // namespace bicliq
