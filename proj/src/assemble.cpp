#include "pentarec/assemble.hpp"

#include <json.hpp>

namespace pentarec {

int RotationScheme::crossing_pairs() const {
    std::size_t total = 0;
    for (const auto& c : crossings) total += c.size();
    return static_cast<int>(total / 2);
}

std::optional<Rejection> check_cover(const Graph& g, const PlanarEmbedding& emb,
                                     const TripletIndex& index, const EdgeClassification& cls) {
    std::vector<int> face_hits(emb.face_count(), 0), edge_hits(g.m(), 0);
    for (int t = 0; t < index.size(); ++t) {
        if (!index.selected(t)) continue;
        for (int f : index.triplets[t].faces()) ++face_hits[f];
        for (EdgeId e : index.triplets[t].crossing_edges()) ++edge_hits[e];
    }
    for (int f = 0; f < emb.face_count(); ++f) {
        if (face_hits[f] > 1) return Rejection{"cover", "face-multicover", "f=" + std::to_string(f)};
        if (face_hits[f] == 0) return Rejection{"cover", "face-uncovered", "f=" + std::to_string(f)};
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!cls.crossing(e)) continue;
        if (edge_hits[e] > 1) return Rejection{"cover", "edge-multicover", "e=" + std::to_string(e)};
        if (edge_hits[e] == 0) return Rejection{"cover", "edge-uncovered", "e=" + std::to_string(e)};
    }
    return std::nullopt;
}

void place_pentagram(const Graph& g, const EdgeMap& em, const std::array<Vertex, 5>& d,
                     std::vector<std::vector<EdgeId>>& insert_after,
                     std::vector<std::vector<EdgeId>>& crossings) {
    auto at = [&](int i) { return d[i % 5]; };
    std::array<EdgeId, 5> chord{};
    for (int i = 0; i < 5; ++i) chord[i] = em.find(at(i), at(i + 2));
    for (int i = 0; i < 5; ++i) {
        EdgeId side = em.find(at(i), at(i + 1));
        auto& slot = insert_after[dart_of(g, side, at(i))];
        slot.push_back(chord[i]);
        slot.push_back(chord[(i + 3) % 5]);

        std::vector<EdgeId> seq{chord[(i + 4) % 5], chord[(i + 1) % 5]};
        if (at(i) > at(i + 2)) std::swap(seq[0], seq[1]);
        crossings[chord[i]] = std::move(seq);
    }
}

std::vector<std::vector<EdgeId>> splice_rotations(const Graph& g,
                                                  const std::vector<std::vector<EdgeId>>& base,
                                                  const std::vector<std::vector<EdgeId>>& insert_after) {
    std::vector<std::vector<EdgeId>> rot(base.size());
    for (Vertex v = 0; v < static_cast<Vertex>(base.size()); ++v) {
        for (EdgeId e : base[v]) {
            rot[v].push_back(e);
            const auto& ins = insert_after[dart_of(g, e, v)];
            rot[v].insert(rot[v].end(), ins.begin(), ins.end());
        }
    }
    return rot;
}

std::array<Vertex, 5> facial_pentagon(const PlanarEmbedding& emb, const Triplet& t) {
    const auto& fv = emb.faces[t.f1];
    bool forward = false;
    for (int i = 0; i < 3; ++i)
        if (fv[i] == t.u && fv[(i + 1) % 3] == t.v1) forward = true;
    if (forward) return {t.u, t.v1, t.w1, t.w2, t.v2};
    return {t.u, t.v2, t.w2, t.w1, t.v1};
}

RotationScheme build_rotation_scheme(const Graph& g, const PlanarEmbedding& emb,
                                     const TripletIndex& index) {
    EdgeMap em(g);
    std::vector<char> fan(g.m(), 0);
    for (int t = 0; t < index.size(); ++t) {
        if (!index.selected(t)) continue;
        const Triplet& x = index.triplets[t];
        fan[em.find(x.u, x.w1)] = 1;
        fan[em.find(x.u, x.w2)] = 1;
    }
    std::vector<std::vector<EdgeId>> base(g.n);
    for (Vertex v = 0; v < g.n; ++v)
        for (EdgeId e : emb.rot[v])
            if (!fan[e]) base[v].push_back(e);

    RotationScheme s;
    s.n = g.n;
    s.edges = g.edges;
    s.crossings.assign(g.m(), {});
    std::vector<std::vector<EdgeId>> insert_after(2 * g.m());
    for (int t = 0; t < index.size(); ++t)
        if (index.selected(t))
            place_pentagram(g, em, facial_pentagon(emb, index.triplets[t]), insert_after, s.crossings);
    s.rot = splice_rotations(g, base, insert_after);
    return s;
}

std::string serialize(const RotationScheme& s) {
    nlohmann::json doc;
    doc["n"] = s.n;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : s.edges) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    doc["rotations"] = s.rot;
    nlohmann::json cr = nlohmann::json::array();
    for (EdgeId e = 0; e < static_cast<EdgeId>(s.crossings.size()); ++e)
        if (!s.crossings[e].empty()) cr.push_back({e, s.crossings[e]});
    doc["crossings"] = std::move(cr);
    return doc.dump() + "\n";
}

namespace {

int as_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected integer");
    return j.get<int>();
}

const nlohmann::json& as_array(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected array");
    return j;
}

} // namespace

RotationScheme deserialize(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("malformed document: ") + ex.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected object");
    for (const char* key : {"n", "edges", "rotations", "crossings"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

    RotationScheme s;
    s.n = as_int(doc["n"], "n");
    if (s.n < 1) throw ParseError("n: must be at least 1");

    const auto& edges = as_array(doc["edges"], "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const auto& pr = as_array(edges[i], where);
        if (pr.size() != 2) throw ParseError(where + ": expected a pair");
        int a = as_int(pr[0], where), b = as_int(pr[1], where);
        if (a < 0 || b < 0 || a >= s.n || b >= s.n) throw ParseError(where + ": vertex out of range");
        s.edges.emplace_back(a, b);
    }
    const int m = static_cast<int>(s.edges.size());

    const auto& rots = as_array(doc["rotations"], "rotations");
    if (static_cast<int>(rots.size()) != s.n) throw ParseError("rotations: expected one list per vertex");
    s.rot.resize(s.n);
    for (int v = 0; v < s.n; ++v) {
        std::string where = "rotations[" + std::to_string(v) + "]";
        for (const auto& x : as_array(rots[v], where)) {
            int e = as_int(x, where);
            if (e < 0 || e >= m) throw ParseError(where + ": edge id out of range");
            s.rot[v].push_back(e);
        }
    }

    s.crossings.assign(m, {});
    const auto& cr = as_array(doc["crossings"], "crossings");
    for (std::size_t i = 0; i < cr.size(); ++i) {
        std::string where = "crossings[" + std::to_string(i) + "]";
        const auto& entry = as_array(cr[i], where);
        if (entry.size() != 2) throw ParseError(where + ": expected [edge, partners]");
        int e = as_int(entry[0], where);
        if (e < 0 || e >= m) throw ParseError(where + ": edge id out of range");
        if (!s.crossings[e].empty()) throw ParseError(where + ": edge listed twice");
        for (const auto& x : as_array(entry[1], where)) {
            int f = as_int(x, where);
            if (f < 0 || f >= m) throw ParseError(where + ": partner id out of range");
            s.crossings[e].push_back(f);
        }
    }
    return s;
}

} // namespace pentarec
