#include "pentarec/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "pentarec/embed.hpp"

namespace pentarec {

namespace {

Verdict invalid(std::string reason, std::string detail = {}) {
    Verdict v;
    v.reason = std::move(reason);
    v.detail = std::move(detail);
    return v;
}

std::string edge_tag(EdgeId e) { return "e=" + std::to_string(e); }

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(off + i) % b.size()]) return false;
    return true;
}

int trace(Planarization& p) {
    const int E = static_cast<int>(p.edges.size());
    std::vector<int> pos(2 * E, -1);
    auto dart = [&](int s, int tail) { return 2 * s + (p.edges[s].first == tail ? 0 : 1); };
    auto tail_of = [&](int d) { return (d & 1) ? p.edges[d >> 1].second : p.edges[d >> 1].first; };
    for (int v = 0; v < p.n; ++v)
        for (int i = 0; i < static_cast<int>(p.rot[v].size()); ++i) pos[dart(p.rot[v][i], v)] = i;
    std::vector<char> seen(2 * E, 0);
    p.faces.clear();
    for (int start = 0; start < 2 * E; ++start) {
        if (seen[start]) continue;
        p.faces.emplace_back();
        int d = start;
        do {
            seen[d] = 1;
            p.faces.back().push_back(tail_of(d));
            int b = tail_of(d ^ 1);
            const auto& r = p.rot[b];
            int k = static_cast<int>(r.size());
            d = dart(r[(pos[d ^ 1] + k - 1) % k], b);
        } while (d != start);
    }
    return static_cast<int>(p.faces.size());
}

bool connected(const Planarization& p) {
    if (p.n == 0) return true;
    std::vector<std::vector<int>> adj(p.n);
    for (auto [a, b] : p.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(p.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == p.n;
}

} // namespace

Verdict verify_scheme(const Graph& g, const RotationScheme& s) {
    const int m = g.m();
    if (s.n != g.n) return invalid("rotation-mismatch", "n");
    if (s.edges != g.edges) return invalid("rotation-mismatch", "edges");
    if (static_cast<int>(s.rot.size()) != g.n) return invalid("rotation-mismatch", "rotations");
    std::vector<int> stamp(m, -1);
    for (Vertex v = 0; v < g.n; ++v) {
        if (s.rot[v].size() != g.inc[v].size()) return invalid("rotation-mismatch", "v=" + std::to_string(v));
        for (EdgeId e : s.rot[v]) {
            if (e < 0 || e >= m || stamp[e] == v || (g.edges[e].first != v && g.edges[e].second != v))
                return invalid("rotation-mismatch", "v=" + std::to_string(v));
            stamp[e] = v;
        }
    }

    if (static_cast<int>(s.crossings.size()) != m) return invalid("crossing-asymmetry", "size");
    for (EdgeId e = 0; e < m; ++e)
        if (s.crossings[e].size() > 2) return invalid("crossing-budget", edge_tag(e));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : s.crossings[e]) {
            if (f < 0 || f >= m) return invalid("crossing-asymmetry", edge_tag(e));
            const auto& back = s.crossings[f];
            if (std::count(back.begin(), back.end(), e) != std::count(s.crossings[e].begin(), s.crossings[e].end(), f))
                return invalid("crossing-asymmetry", edge_tag(e));
        }
    for (EdgeId e = 0; e < m; ++e) {
        const auto& c = s.crossings[e];
        if (c.size() == 2 && c[0] == c[1]) return invalid("degenerate-crossing", edge_tag(e));
        for (EdgeId f : c) {
            auto [a, b] = g.edges[e];
            auto [x, y] = g.edges[f];
            if (f == e || a == x || a == y || b == x || b == y) return invalid("degenerate-crossing", edge_tag(e));
        }
    }

    // planarization
    Planarization p;
    p.real = g.n;
    std::unordered_map<std::uint64_t, int> dummy;
    auto key = [](EdgeId a, EdgeId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    int next = g.n;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : s.crossings[e])
            if (e < f) dummy[key(e, f)] = next++;
    p.n = next;
    p.rot.assign(p.n, {});
    std::vector<int> first_seg(m), last_seg(m);
    // dummy -> (segment toward lower endpoint, segment toward higher) per crossing edge
    std::vector<std::array<int, 4>> ends(p.n - g.n, {-1, -1, -1, -1});
    std::vector<std::array<EdgeId, 2>> owners(p.n - g.n, {kNoEdge, kNoEdge});
    for (EdgeId e = 0; e < m; ++e) {
        std::vector<int> chain{g.edges[e].first};
        for (EdgeId f : s.crossings[e]) chain.push_back(dummy[key(e, f)]);
        chain.push_back(g.edges[e].second);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            int seg = static_cast<int>(p.edges.size());
            p.edges.emplace_back(chain[i], chain[i + 1]);
            p.origin.push_back(e);
            if (i == 0) first_seg[e] = seg;
            if (i + 2 == chain.size()) last_seg[e] = seg;
            for (int side = 0; side < 2; ++side) {
                int x = chain[i + side];
                if (x < g.n) continue;
                int slot = owners[x - g.n][0] == kNoEdge || owners[x - g.n][0] == e ? 0 : 1;
                owners[x - g.n][slot] = e;
                // side 1 means the segment arrives at x from the lower endpoint
                ends[x - g.n][2 * slot + (side == 1 ? 0 : 1)] = seg;
            }
        }
    }
    for (Vertex v = 0; v < g.n; ++v)
        for (EdgeId e : s.rot[v]) p.rot[v].push_back(g.edges[e].first == v ? first_seg[e] : last_seg[e]);

    Verdict out;
    out.planar_vertices = p.n;
    out.planar_edges = static_cast<int>(p.edges.size());
    auto finish = [&](std::string reason) {
        Verdict v = invalid(std::move(reason));
        v.planar_vertices = out.planar_vertices;
        v.planar_edges = out.planar_edges;
        return v;
    };
    if (!connected(p)) return finish("disconnected");

    if (p.n > g.n) {
        auto boost_rot = planar_rotation(p.n, p.edges);
        if (!boost_rot) return finish("euler-violation");
        bool mirror = false;
        for (Vertex v = 0; v < g.n; ++v) {
            if (p.rot[v].size() < 3) continue;
            if (!cyclic_equal(p.rot[v], (*boost_rot)[v])) {
                std::vector<int> rev((*boost_rot)[v].rbegin(), (*boost_rot)[v].rend());
                mirror = cyclic_equal(p.rot[v], rev);
            }
            break;
        }
        for (int x = g.n; x < p.n; ++x) {
            std::vector<int> order = (*boost_rot)[x];
            if (mirror) std::reverse(order.begin(), order.end());
            const auto& en = ends[x - g.n];
            // alternate the two edges, keeping the side the embedding put first
            int a_in = en[0], a_out = en[1];
            int first_b = -1;
            auto it = std::find(order.begin(), order.end(), a_in);
            for (std::size_t k = 1; k < order.size() && it != order.end(); ++k) {
                int c = order[(static_cast<std::size_t>(it - order.begin()) + k) % order.size()];
                if (c != a_out) {
                    first_b = c;
                    break;
                }
            }
            if (first_b < 0) first_b = en[2];
            int other_b = first_b == en[2] ? en[3] : en[2];
            p.rot[x] = {a_in, first_b, a_out, other_b};
        }
    }

    int faces = trace(p);
    out.planar_faces = faces;
    if (p.n - out.planar_edges + faces != 2) {
        Verdict v = finish("euler-violation");
        v.planar_faces = faces;
        return v;
    }
    out.valid = true;
    out.planarization = std::move(p);
    return out;
}

Verdict verify_optimal(const Graph& g, const RotationScheme& s) {
    Verdict v = verify_scheme(g, s);
    if (!v.valid) return v;
    if (g.m() != 5 * g.n - 10) {
        v.valid = false;
        v.reason = "edge-count";
        v.detail = "m=" + std::to_string(g.m());
    }
    return v;
}

} // namespace pentarec
