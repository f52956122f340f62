#include "pentarec/triplets.hpp"

#include <algorithm>

namespace pentarec {

Triplet mirrored(const Triplet& t) {
    Triplet m = t;
    std::swap(m.f1, m.f2);
    std::swap(m.v1, m.v2);
    std::swap(m.w1, m.w2);
    std::swap(m.e1, m.e2);
    std::swap(m.g1, m.g2);
    return m;
}

bool face_disjoint(const Triplet& a, const Triplet& b) {
    for (int x : a.faces())
        if (b.has_face(x)) return false;
    return true;
}

int shared_vertices(const Triplet& a, const Triplet& b) {
    int k = 0;
    for (Vertex x : a.vertices())
        if (b.has_vertex(x)) ++k;
    return k;
}

const char* to_string(TripletLabel l) {
    switch (l) {
    case TripletLabel::Unlabeled: return "unlabeled";
    case TripletLabel::Facial: return "facial";
    case TripletLabel::NonFacial: return "non-facial";
    case TripletLabel::FacialForced: return "facial-forced";
    }
    return "unknown";
}

namespace {

Vertex third_vertex(const PlanarEmbedding& emb, int face, Vertex a, Vertex b) {
    for (Vertex x : emb.faces[face])
        if (x != a && x != b) return x;
    return -1;
}

int across(const PlanarEmbedding& emb, const DualGraph& dual, int face, Vertex a, Vertex b) {
    const auto& fv = emb.faces[face];
    for (int k = 0; k < 3; ++k) {
        Vertex x = fv[k], y = fv[(k + 1) % 3];
        if ((x == a && y == b) || (x == b && y == a)) return dual.nbr[face][k];
    }
    return -1;
}

} // namespace

TripletIndex enumerate_triplets(const Graph& g, const DegeneracyOrder& d,
                                const PlanarEmbedding& emb, const DualGraph& dual,
                                const EdgeClassification& cls) {
    TripletIndex idx;
    idx.by_face.assign(emb.face_count(), {});
    idx.by_edge.assign(g.m(), {});
    for (int f = 0; f < emb.face_count(); ++f) {
        const auto& fv = emb.faces[f];
        for (int i = 0; i < 3; ++i) {
            // edges i and i+1 of f meet at the apex fv[i+1]
            int j = (i + 1) % 3;
            int fa = dual.nbr[f][i], fb = dual.nbr[f][j];
            if (fa == fb || fa == f || fb == f) continue;
            Vertex u = fv[j];
            Vertex wa = fv[i], wb = fv[(i + 2) % 3];
            Vertex va = third_vertex(emb, fa, u, wa);
            Vertex vb = third_vertex(emb, fb, u, wb);
            Triplet t;
            t.f = f;
            t.u = u;
            if (fa < fb) {
                t.f1 = fa, t.w1 = wa, t.v1 = va;
                t.f2 = fb, t.w2 = wb, t.v2 = vb;
            } else {
                t.f1 = fb, t.w1 = wb, t.v1 = vb;
                t.f2 = fa, t.w2 = wa, t.v2 = va;
            }
            if (t.v1 < 0 || t.v2 < 0 || t.v1 == t.v2 || t.v1 == t.w2 || t.v2 == t.w1) continue;
            t.e1 = edge_between(d, t.v1, t.w2);
            t.e2 = edge_between(d, t.v2, t.w1);
            t.e = edge_between(d, t.v1, t.v2);
            if (t.e1 == kNoEdge || t.e2 == kNoEdge || t.e == kNoEdge) continue;
            if (!cls.crossing(t.e1) || !cls.crossing(t.e2) || !cls.crossing(t.e)) continue;
            t.g1 = across(emb, dual, t.f1, t.v1, t.w1);
            t.g2 = across(emb, dual, t.f2, t.v2, t.w2);
            int id = idx.size();
            idx.triplets.push_back(t);
            for (int x : t.faces()) idx.by_face[x].push_back(id);
            for (EdgeId x : t.crossing_edges()) idx.by_edge[x].push_back(id);
        }
    }
    idx.label.assign(idx.size(), TripletLabel::Unlabeled);
    return idx;
}

std::optional<Rejection> forced_fast_path(const Graph& g, const EdgeClassification& cls,
                                          TripletIndex& index) {
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!cls.crossing(e)) continue;
        const auto& s = index.by_edge[e];
        if (s.empty())
            return Rejection{"triplets", "uncoverable-edge",
                             "e=" + std::to_string(e) + ",uv=" + std::to_string(g.edges[e].first) +
                                 "-" + std::to_string(g.edges[e].second)};
        if (s.size() == 1) index.label[s[0]] = TripletLabel::FacialForced;
    }
    return std::nullopt;
}

namespace {

// Calls fn(S) for every degree-9 vertex of t, S being its five outside neighbors.
template <typename Fn>
bool any_link(const Triplet& t, const Graph& g, Fn fn) {
    for (Vertex v : t.vertices()) {
        if (g.degree(v) != 9) continue;
        std::array<Vertex, 9> s{};
        int k = 0;
        for (EdgeId e : g.inc[v]) {
            Vertex x = g.other(e, v);
            if (!t.has_vertex(x)) s[k++] = x;
        }
        if (fn(s.data(), k)) return true;
    }
    return false;
}

int link_degree(const DegeneracyOrder& d, const Vertex* s, int k, int i) {
    int c = 0;
    for (int j = 0; j < k; ++j)
        if (j != i && adjacent(d, s[i], s[j])) ++c;
    return c;
}

} // namespace

bool isolated_link_vertex(const Triplet& t, const Graph& g, const DegeneracyOrder& d) {
    return any_link(t, g, [&](const Vertex* s, int k) {
        for (int i = 0; i < k; ++i)
            if (link_degree(d, s, k, i) <= 1) return true;
        return false;
    });
}

bool sparse_link(const Triplet& t, const Graph& g, const DegeneracyOrder& d) {
    return any_link(t, g, [&](const Vertex* s, int k) {
        for (int i = 0; i < k; ++i)
            if (link_degree(d, s, k, i) > 3) return false;
        return true;
    });
}

namespace {

std::vector<const Triplet*> partner_candidates(int self, const Triplet& t, const TripletIndex& index) {
    std::vector<const Triplet*> out;
    for (int id : index.by_face[t.f]) {
        const Triplet& x = index.triplets[id];
        if (id != self && x.has_face(t.f2) && !x.has_face(t.f1)) out.push_back(&x);
    }
    return out;
}

std::vector<const Triplet*> side_candidates(int self, const Triplet& t, const TripletIndex& index) {
    std::vector<const Triplet*> out;
    for (int id : index.by_face[t.f1]) {
        const Triplet& x = index.triplets[id];
        if (id == self || x.has_face(t.f)) continue;
        if (shared_vertices(x, t) != 3) continue;
        if (x.has_vertex(t.u) && x.has_vertex(t.w1) && x.has_vertex(t.v1)) out.push_back(&x);
    }
    return out;
}

std::vector<const Triplet*> others(int self, const TripletIndex& index, EdgeId e) {
    std::vector<const Triplet*> out;
    for (int id : index.by_edge[e])
        if (id != self) out.push_back(&index.triplets[id]);
    return out;
}

} // namespace

bool double_clique_conflict(int self, const Triplet& t, const TripletIndex& index) {
    if (t.g2 < 0) return false;
    std::vector<const Triplet*> first;
    for (int id : index.by_face[t.g2]) {
        const Triplet& x = index.triplets[id];
        if (id != self && x.has_edge(t.e1) && x.has_edge(t.e) && face_disjoint(x, t))
            first.push_back(&x);
    }
    if (first.empty()) return false;
    for (const Triplet* t2 : partner_candidates(self, t, index))
        for (const Triplet* t1 : first)
            if (face_disjoint(*t1, *t2) && shared_vertices(*t1, *t2) == 2) return true;
    return false;
}

namespace {

bool exhaustive_search(const Triplet& t, const std::vector<const Triplet*>& partners,
                       const std::vector<const Triplet*>& sides,
                       const std::vector<const Triplet*>& s1,
                       const std::vector<const Triplet*>& se) {
    for (const Triplet* t2 : partners)
        for (const Triplet* tf : sides) {
            if (!face_disjoint(*tf, *t2)) continue;
            for (const Triplet* t1 : s1) {
                if (!face_disjoint(*t1, t) || t1->has_vertex(t.w1)) continue;
                if (!face_disjoint(*t1, *t2) || !face_disjoint(*tf, *t1)) continue;
                for (const Triplet* te : se) {
                    if (te->has_vertex(t.u)) continue;
                    if (!face_disjoint(*te, *t1) || !face_disjoint(*te, *t2)) continue;
                    if (!face_disjoint(*tf, *te)) continue;
                    return true;
                }
            }
        }
    return false;
}

} // namespace

bool rival_cover_conflict_exhaustive(int self, const Triplet& t, const TripletIndex& index) {
    auto partners = partner_candidates(self, t, index);
    auto sides = side_candidates(self, t, index);
    if (partners.empty() || sides.empty()) return false;
    return exhaustive_search(t, partners, sides, others(self, index, t.e1), others(self, index, t.e));
}

bool rival_cover_conflict(int self, const Triplet& t, const TripletIndex& index,
                          const BatteryConfig& cfg) {
    auto partners = partner_candidates(self, t, index);
    auto sides = side_candidates(self, t, index);
    if (partners.empty() || sides.empty()) return false;
    auto s1 = others(self, index, t.e1);
    auto se = others(self, index, t.e);
    const int n1 = static_cast<int>(s1.size()), ne = static_cast<int>(se.size());
    if (n1 < cfg.exhaustive_limit && ne < cfg.exhaustive_limit)
        return exhaustive_search(t, partners, sides, s1, se);

    // One containing set is large enough to always supply its member; search
    // the other one, unless it is large enough as well.
    const bool find_first = ne >= cfg.exhaustive_limit;
    const auto& pool = find_first ? s1 : se;
    const bool guaranteed = static_cast<int>(pool.size()) >= cfg.guarantee_limit;
    for (const Triplet* t2 : partners)
        for (const Triplet* tf : sides) {
            if (!face_disjoint(*tf, *t2)) continue;
            if (guaranteed) return true;
            for (const Triplet* x : pool) {
                if (x->has_vertex(find_first ? t.w1 : t.u)) continue;
                if (face_disjoint(*x, t) && face_disjoint(*x, *t2) && face_disjoint(*x, *tf))
                    return true;
            }
        }
    return false;
}

TripletLabel label_triplet(int self, const TripletIndex& index, const Graph& g,
                           const DegeneracyOrder& d, const BatteryConfig& cfg) {
    const Triplet& t = index.triplets[self];
    if (isolated_link_vertex(t, g, d) || sparse_link(t, g, d)) return TripletLabel::NonFacial;
    for (const Triplet& o : {t, mirrored(t)}) {
        if (double_clique_conflict(self, o, index)) return TripletLabel::NonFacial;
        if (rival_cover_conflict(self, o, index, cfg)) return TripletLabel::NonFacial;
    }
    return TripletLabel::Facial;
}

void label_all(TripletIndex& index, const Graph& g, const DegeneracyOrder& d,
               const BatteryConfig& cfg) {
    for (int t = 0; t < index.size(); ++t)
        if (index.label[t] != TripletLabel::FacialForced)
            index.label[t] = label_triplet(t, index, g, d, cfg);
}

} // namespace pentarec
