#include "pentarec/embed.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace pentarec {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

void rotate_to_smallest(const Graph& g, std::vector<std::vector<EdgeId>>& rot) {
    for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v) {
        auto& r = rot[v];
        if (r.empty()) continue;
        auto best = std::min_element(r.begin(), r.end(), [&](EdgeId a, EdgeId b) {
            return g.other(a, v) < g.other(b, v);
        });
        std::rotate(r.begin(), best, r.end());
    }
}

// Fixes the reflection: at vertex 0, with b its smallest neighbor, the
// counter-clockwise successor of b gets the smaller id of b's two rotation
// neighbors.
void canonicalize(const Graph& g, PlanarEmbedding& emb) {
    rotate_to_smallest(g, emb.rot);
    if (emb.rot.empty() || emb.rot[0].size() < 3) return;
    const auto& r = emb.rot[0];
    if (g.other(r[1], 0) > g.other(r.back(), 0)) {
        for (auto& rv : emb.rot) std::reverse(rv.begin(), rv.end());
        rotate_to_smallest(g, emb.rot);
    }
}

bool connected_spanning(const Graph& g, const std::vector<EdgeId>& gp, Vertex& witness) {
    std::vector<std::vector<Vertex>> adj(g.n);
    for (EdgeId e : gp) {
        adj[g.edges[e].first].push_back(g.edges[e].second);
        adj[g.edges[e].second].push_back(g.edges[e].first);
    }
    if (g.n == 0) return true;
    for (Vertex v = 0; v < g.n; ++v) {
        if (adj[v].empty() && g.n > 1) {
            witness = v;
            return false;
        }
    }
    std::vector<char> seen(g.n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (!seen[v]) {
            witness = v;
            return false;
        }
    return true;
}

} // namespace

std::optional<std::vector<std::vector<int>>> planar_rotation(
    int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    BoostGraph bg(n);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto res = boost::add_edge(edges[i].first, edges[i].second, bg);
        boost::put(boost::edge_index, bg, res.first, i);
    }
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> boost_rot(std::max(n, 1));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &boost_rot[0]);
    if (!planar) return std::nullopt;
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (const auto& ed : boost_rot[v]) rot[v].push_back(boost::get(boost::edge_index, bg, ed));
    return rot;
}

std::vector<EdgeId> build_gp(const Graph& g, const EdgeClassification& cls) {
    std::vector<EdgeId> gp;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (cls.planar(e)) gp.push_back(e);
    return gp;
}

int next_dart(const Graph& g, const PlanarEmbedding& emb, int dart) {
    Vertex b = dart_head(g, dart);
    const auto& r = emb.rot[b];
    int p = emb.rot_pos[dart ^ 1];
    int k = static_cast<int>(r.size());
    return dart_of(g, r[(p + k - 1) % k], b);
}

void trace_faces(const Graph& g, PlanarEmbedding& emb) {
    emb.rot_pos.assign(2 * g.m(), -1);
    for (Vertex v = 0; v < static_cast<Vertex>(emb.rot.size()); ++v)
        for (int i = 0; i < static_cast<int>(emb.rot[v].size()); ++i)
            emb.rot_pos[dart_of(g, emb.rot[v][i], v)] = i;
    emb.dart_face.assign(2 * g.m(), -1);
    emb.faces.clear();
    emb.face_edges.clear();
    for (int start = 0; start < 2 * g.m(); ++start) {
        if (emb.rot_pos[start] < 0 || emb.dart_face[start] >= 0) continue;
        int f = static_cast<int>(emb.faces.size());
        emb.faces.emplace_back();
        emb.face_edges.emplace_back();
        int dart = start;
        do {
            emb.dart_face[dart] = f;
            emb.faces[f].push_back(dart_tail(g, dart));
            emb.face_edges[f].push_back(dart >> 1);
            dart = next_dart(g, emb, dart);
        } while (dart != start);
    }
    emb.outer_face = -1;
    if (!emb.rot.empty() && !emb.rot[0].empty())
        emb.outer_face = emb.dart_face[dart_of(g, emb.rot[0][0], 0)];
}

bool faces_meet_properly(const Graph& g, const PlanarEmbedding& emb) {
    const int n = g.n;
    const int F = emb.face_count();
    const int N = n + F;
    std::vector<std::vector<int>> adj(N);
    for (int f = 0; f < F; ++f)
        for (Vertex v : emb.faces[f]) {
            adj[n + f].push_back(v);
            adj[v].push_back(n + f);
        }
    auto rank_less = [&](int a, int b) {
        return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
    };
    EdgeMap em(g);
    auto edge_sides_are = [&](Vertex a, Vertex b, int fa, int fb) {
        EdgeId e = em.find(a, b);
        if (e == kNoEdge) return false;
        int d = 2 * e;
        if (emb.rot_pos[d] < 0) return false;
        int s = emb.dart_face[d], t = emb.dart_face[d ^ 1];
        return (s == fa && t == fb) || (s == fb && t == fa);
    };
    std::vector<std::vector<int>> via(N);
    std::vector<int> touched;
    for (int x = 0; x < N; ++x) {
        touched.clear();
        bool ok = true;
        for (int y : adj[x]) {
            if (!rank_less(y, x)) continue;
            for (int z : adj[y]) {
                if (z == x || !rank_less(z, x)) continue;
                if (via[z].empty()) touched.push_back(z);
                via[z].push_back(y);
                if (via[z].size() >= 3) ok = false;
            }
        }
        for (int z : touched) {
            if (ok && via[z].size() == 2) {
                int y1 = via[z][0], y2 = via[z][1];
                bool good = x >= n ? edge_sides_are(y1, y2, x - n, z - n)
                                   : edge_sides_are(x, z, y1 - n, y2 - n);
                if (!good) ok = false;
            }
            via[z].clear();
        }
        if (!ok) return false;
    }
    return true;
}

EmbedOutcome check_planar_3connected(const Graph& g, const std::vector<EdgeId>& gp) {
    EmbedOutcome out;
    Vertex w = -1;
    if (!connected_spanning(g, gp, w)) {
        out.reject = Rejection{"embed", "not-spanning", "v=" + std::to_string(w)};
        return out;
    }

    std::vector<std::pair<Vertex, Vertex>> sub;
    sub.reserve(gp.size());
    for (EdgeId e : gp) sub.push_back(g.edges[e]);
    auto rot = planar_rotation(g.n, sub);
    if (!rot) {
        out.reject = Rejection{"embed", "not-planar", ""};
        return out;
    }

    PlanarEmbedding emb;
    emb.rot.assign(g.n, {});
    for (Vertex v = 0; v < g.n; ++v)
        for (int i : (*rot)[v]) emb.rot[v].push_back(gp[i]);
    trace_faces(g, emb);

    if (g.n < 4) {
        out.reject = Rejection{"embed", "not-3-connected", "n=" + std::to_string(g.n)};
        return out;
    }
    std::vector<int> mark(g.n, -1);
    for (int f = 0; f < emb.face_count(); ++f)
        for (Vertex v : emb.faces[f]) {
            if (mark[v] == f) {
                out.reject = Rejection{"embed", "not-3-connected", "cut=" + std::to_string(v)};
                return out;
            }
            mark[v] = f;
        }
    if (!faces_meet_properly(g, emb)) {
        out.reject = Rejection{"embed", "not-3-connected", ""};
        return out;
    }

    canonicalize(g, emb);
    trace_faces(g, emb);
    out.embedding = std::move(emb);
    return out;
}

std::optional<Rejection> face_audit(const Graph& g, const DegeneracyOrder& d,
                                    const PlanarEmbedding& emb) {
    (void)g;
    for (int f = 0; f < emb.face_count(); ++f)
        if (emb.faces[f].size() > 5)
            return Rejection{"embed", "face-too-long",
                             "f=" + std::to_string(f) + ",len=" + std::to_string(emb.faces[f].size())};
    for (int f = 0; f < emb.face_count(); ++f) {
        const auto& fv = emb.faces[f];
        for (std::size_t i = 0; i < fv.size(); ++i)
            for (std::size_t j = i + 1; j < fv.size(); ++j)
                if (!adjacent(d, fv[i], fv[j]))
                    return Rejection{"embed", "face-not-clique",
                                     "f=" + std::to_string(f) + ",pair=" + std::to_string(fv[i]) +
                                         "-" + std::to_string(fv[j])};
    }
    return std::nullopt;
}

int triangulate(const Graph& g, const DegeneracyOrder& d, PlanarEmbedding& emb,
                EdgeClassification& cls) {
    std::vector<std::vector<EdgeId>> insert_after(2 * g.m());
    int added = 0;
    for (int f = 0; f < emb.face_count(); ++f) {
        const auto& fv = emb.faces[f];
        const int k = static_cast<int>(fv.size());
        if (k <= 3) continue;
        int i = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
        auto at = [&](int j) { return fv[((i + j) % k + k) % k]; };
        Vertex apex = at(0);
        std::vector<EdgeId> chords;
        for (int j = 2; j <= k - 2; ++j) {
            EdgeId c = edge_between(d, apex, at(j));
            chords.push_back(c);
            cls.relabel(c, EdgeClass::PotentiallyPlanar, ReclassCause::Triangulation);
            ++added;
            // at the chord's far endpoint, the face sector opens after the edge to at(j+1)
            EdgeId anchor = edge_between(d, at(j), at(j + 1));
            insert_after[dart_of(g, anchor, at(j))].push_back(c);
        }
        EdgeId anchor = edge_between(d, apex, at(1));
        auto& slot = insert_after[dart_of(g, anchor, apex)];
        slot.insert(slot.end(), chords.begin(), chords.end());
    }
    if (added == 0) return 0;
    for (Vertex v = 0; v < g.n; ++v) {
        std::vector<EdgeId> r;
        r.reserve(emb.rot[v].size());
        for (EdgeId e : emb.rot[v]) {
            r.push_back(e);
            const auto& ins = insert_after[dart_of(g, e, v)];
            r.insert(r.end(), ins.begin(), ins.end());
        }
        emb.rot[v] = std::move(r);
    }
    rotate_to_smallest(g, emb.rot);
    trace_faces(g, emb);
    return added;
}

DualGraph dual(const Graph& g, const PlanarEmbedding& emb) {
    DualGraph dg;
    dg.nbr.resize(emb.face_count());
    dg.via.resize(emb.face_count());
    for (int f = 0; f < emb.face_count(); ++f) {
        for (int i = 0; i < 3; ++i) {
            EdgeId e = emb.face_edges[f][i];
            int dart = dart_of(g, e, emb.faces[f][i]);
            dg.nbr[f][i] = emb.dart_face[dart ^ 1];
            dg.via[f][i] = e;
        }
    }
    return dg;
}

} // namespace pentarec
