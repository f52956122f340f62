#include "pentarec/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace pentarec {

namespace {

std::string describe(GraphError::Kind kind, int u, int v) {
    std::string what;
    switch (kind) {
    case GraphError::Kind::SelfLoop: what = "self-loop"; break;
    case GraphError::Kind::ParallelEdge: what = "parallel edge"; break;
    case GraphError::Kind::VertexOutOfRange: what = "vertex out of range"; break;
    }
    return what + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

GraphError::GraphError(Kind kind, int u, int v)
    : std::runtime_error(describe(kind, u, v)), kind(kind), u(u), v(v) {}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw GraphError(GraphError::Kind::VertexOutOfRange, n, n);
    Graph g;
    g.n = n;
    g.inc.assign(n, {});
    g.edges.reserve(pairs.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(pairs.size() * 2);
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange, u, v);
        if (u == v) throw GraphError(GraphError::Kind::SelfLoop, u, v);
        Vertex a = std::min(u, v), b = std::max(u, v);
        std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        if (!seen.insert(k).second) throw GraphError(GraphError::Kind::ParallelEdge, u, v);
        EdgeId e = static_cast<EdgeId>(g.edges.size());
        g.edges.emplace_back(a, b);
        g.inc[a].push_back(e);
        g.inc[b].push_back(e);
    }
    return g;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    const int n = g.n;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    // min-heap on (current degree, id) with lazy deletion
    using Key = std::pair<int, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) heap.emplace(deg[v], v);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> removal;
    removal.reserve(n);
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (removed[v] || dv != deg[v]) continue;
        removed[v] = 1;
        removal.push_back(v);
        for (EdgeId e : g.inc[v]) {
            Vertex w = g.other(e, v);
            if (!removed[w]) heap.emplace(--deg[w], w);
        }
    }

    DegeneracyOrder d;
    d.order.assign(removal.rbegin(), removal.rend());
    d.pos.assign(n, 0);
    for (int i = 0; i < n; ++i) d.pos[d.order[i]] = i;

    d.back_start.assign(n + 1, 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges[e];
        Vertex later = d.pos[a] > d.pos[b] ? a : b;
        ++d.back_start[later + 1];
    }
    for (int v = 0; v < n; ++v) d.back_start[v + 1] += d.back_start[v];
    d.back_nbr.resize(g.m());
    d.back_edge.resize(g.m());
    std::vector<int> fill(d.back_start.begin(), d.back_start.end() - 1);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges[e];
        Vertex later = d.pos[a] > d.pos[b] ? a : b;
        int slot = fill[later]++;
        d.back_nbr[slot] = later == a ? b : a;
        d.back_edge[slot] = e;
    }
    for (int v = 0; v < n; ++v)
        d.degeneracy = std::max(d.degeneracy, d.back_start[v + 1] - d.back_start[v]);
    return d;
}

EdgeId edge_between(const DegeneracyOrder& d, Vertex u, Vertex v) {
    if (u == v) return kNoEdge;
    Vertex later = d.pos[u] > d.pos[v] ? u : v;
    Vertex earlier = later == u ? v : u;
    auto nb = d.back(later);
    for (std::size_t i = 0; i < nb.size(); ++i)
        if (nb[i] == earlier) return d.back_edge[d.back_start[later] + i];
    return kNoEdge;
}

bool adjacent(const DegeneracyOrder& d, Vertex u, Vertex v) {
    return edge_between(d, u, v) != kNoEdge;
}

std::uint64_t EdgeMap::key(Vertex u, Vertex v) {
    Vertex a = std::min(u, v), b = std::max(u, v);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

EdgeMap::EdgeMap(const Graph& g) {
    map_.reserve(g.edges.size() * 2);
    for (EdgeId e = 0; e < g.m(); ++e) map_.emplace(key(g.edges[e].first, g.edges[e].second), e);
}

EdgeId EdgeMap::find(Vertex u, Vertex v) const {
    auto it = map_.find(key(u, v));
    return it == map_.end() ? kNoEdge : it->second;
}

} // namespace pentarec
