#include "bicliq/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicliq {

VertexOrdering::VertexOrdering(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    inverse_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        int v = order_[pos];
        if (v < 0 || v >= n || inverse_[v] != -1)
            throw std::invalid_argument("ordering: not a permutation");
        inverse_[v] = pos;
    }
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> rev(order_.rbegin(), order_.rend());
    return VertexOrdering(std::move(rev));
}

namespace {

// Bucket = one label class; vertices inside stay in ascending id order
// because splits preserve relative order and moves append in adjacency
// (ascending) order.
struct Bucket {
    int head = -1;
    int tail = -1;
    int prev = -1;
    int next = -1;
    int stamp = -1;   // pivot that created this bucket's split partner
    int partner = -1; // bucket receiving this bucket's pivot-neighbors
    int size = 0;
};

} // namespace

VertexOrdering lexbfs(const Graph& g, int start) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("lexbfs: empty graph");
    if (start < 0 || start >= n) throw std::invalid_argument("lexbfs: start out of range");

    std::vector<Bucket> buckets;
    buckets.reserve(2 * static_cast<std::size_t>(n));
    std::vector<int> vnext(n, -1), vprev(n, -1), vbucket(n, -1);
    std::vector<char> numbered(n, 0);

    auto append_vertex = [&](int b, int v) {
        Bucket& bk = buckets[b];
        vprev[v] = bk.tail;
        vnext[v] = -1;
        if (bk.tail >= 0)
            vnext[bk.tail] = v;
        else
            bk.head = v;
        bk.tail = v;
        ++bk.size;
        vbucket[v] = b;
    };
    auto detach_vertex = [&](int v) {
        Bucket& bk = buckets[vbucket[v]];
        if (vprev[v] >= 0)
            vnext[vprev[v]] = vnext[v];
        else
            bk.head = vnext[v];
        if (vnext[v] >= 0)
            vprev[vnext[v]] = vprev[v];
        else
            bk.tail = vprev[v];
        --bk.size;
    };

    int first_bucket = 0;
    buckets.push_back(Bucket{});
    append_vertex(0, start);
    if (n > 1) {
        buckets.push_back(Bucket{});
        buckets[0].next = 1;
        buckets[1].prev = 0;
        for (int v = 0; v < n; ++v)
            if (v != start) append_vertex(1, v);
    }

    auto unlink_bucket = [&](int b) {
        Bucket& bk = buckets[b];
        if (bk.prev >= 0)
            buckets[bk.prev].next = bk.next;
        else
            first_bucket = bk.next;
        if (bk.next >= 0) buckets[bk.next].prev = bk.prev;
    };

    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        const int pivot = buckets[first_bucket].head;
        detach_vertex(pivot);
        if (buckets[first_bucket].size == 0) unlink_bucket(first_bucket);
        numbered[pivot] = 1;
        order.push_back(pivot);

        for (int w : g.neighbors(pivot)) {
            if (numbered[w]) continue;
            const int src = vbucket[w];
            if (buckets[src].stamp != pivot) {
                // new split partner immediately in front of src
                const int nb = static_cast<int>(buckets.size());
                buckets.push_back(Bucket{});
                buckets[nb].prev = buckets[src].prev;
                buckets[nb].next = src;
                if (buckets[src].prev >= 0)
                    buckets[buckets[src].prev].next = nb;
                else
                    first_bucket = nb;
                buckets[src].prev = nb;
                buckets[src].stamp = pivot;
                buckets[src].partner = nb;
            }
            detach_vertex(w);
            append_vertex(buckets[src].partner, w);
            if (buckets[src].size == 0) unlink_bucket(src);
        }
    }
    return VertexOrdering(std::move(order));
}

bool is_peo(const Graph& g, const VertexOrdering& sigma) {
    const int n = g.vertex_count();
    if (sigma.size() != n) throw std::invalid_argument("is_peo: ordering size mismatch");

    std::vector<int> later; // RN(v), reused
    for (int v = 0; v < n; ++v) {
        const int pv = sigma.position_of(v);
        later.clear();
        int parent = -1;
        for (int u : g.neighbors(v)) {
            if (sigma.position_of(u) > pv) {
                later.push_back(u);
                if (parent == -1 || sigma.position_of(u) < sigma.position_of(parent)) parent = u;
            }
        }
        for (int u : later)
            if (u != parent && !g.has_edge(parent, u)) return false;
    }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("is_chordal: empty graph");
    VertexOrdering peo = lexbfs(g, 0).reversed();
    if (is_peo(g, peo)) return {true, std::move(peo)};
    return {false, std::nullopt};
}

std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12 || n < 4) return std::nullopt;

    std::vector<unsigned> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;

    // A vertex subset induces a cycle iff every member has exactly two
    // neighbors inside it and the induced graph is connected.
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v)
            if (s & (1u << v))
                if (__builtin_popcount(adj[v] & s) != 2) two_regular = false;
        if (!two_regular) continue;

        const int first = __builtin_ctz(s);
        unsigned seen = 1u << first;
        unsigned frontier = adj[first] & s;
        while (frontier) {
            seen |= frontier;
            unsigned next = 0;
            for (unsigned f = frontier; f; f &= f - 1)
                next |= adj[__builtin_ctz(f)] & s;
            frontier = next & ~seen;
        }
        if (seen != s) continue;

        // walk the cycle to report vertices in cyclic order
        std::vector<int> cycle{first};
        int prev = -1, cur = first;
        do {
            unsigned nbrs = adj[cur] & s;
            if (prev >= 0) nbrs &= ~(1u << prev);
            int nxt = __builtin_ctz(nbrs);
            prev = cur;
            cur = nxt;
            if (cur != first) cycle.push_back(cur);
        } while (cur != first);
        return cycle;
    }
    return std::nullopt;
}

} // namespace bicliq
