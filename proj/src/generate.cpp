#include "pentarec/generate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

#include "pentarec/classify.hpp"
#include "pentarec/embed.hpp"

namespace pentarec {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::unordered_set<std::uint64_t> edge_keys(const Pentangulation& p) {
    std::unordered_set<std::uint64_t> s;
    for (const auto& f : p.faces)
        for (int i = 0; i < 5; ++i) s.insert(pair_key(f[i], f[(i + 1) % 5]));
    return s;
}

} // namespace

Pentangulation dodecahedron() {
    Pentangulation p;
    p.n = 20;
    // rings: a_i = i (outer cycle), b_i = 5+i, c_i = 10+i, d_i = 15+i (inner cycle)
    p.faces.push_back({0, 4, 3, 2, 1});
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        p.faces.push_back({i, j, 5 + j, 10 + i, 5 + i});
    }
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        p.faces.push_back({10 + i, 5 + j, 10 + j, 15 + j, 15 + i});
    }
    p.faces.push_back({15, 16, 17, 18, 19});
    return p;
}

void glue_into(Pentangulation& p1, int f1, const Pentangulation& p2, int f2, int alignment) {
    if (alignment < 0 || alignment > 9) throw std::invalid_argument("alignment must be in 0..9");
    if (f1 < 0 || f1 >= p1.face_count() || f2 < 0 || f2 >= p2.face_count())
        throw std::invalid_argument("face out of range");
    const bool mirror = alignment >= 5;
    const int r = alignment % 5;
    const auto a = p1.faces[f1];
    auto b = p2.faces[f2];
    if (mirror) std::reverse(b.begin(), b.end());

    std::vector<Vertex> map(p2.n, -1);
    for (int j = 0; j < 5; ++j) map[b[j]] = a[((r - j) % 5 + 5) % 5];

    // a chord of the seam present on both sides would become a parallel edge
    std::vector<std::uint64_t> seam_chords;
    for (const auto& f : p2.faces)
        for (int i = 0; i < 5; ++i) {
            Vertex x = f[i], y = f[(i + 1) % 5];
            if (map[x] < 0 || map[y] < 0) continue;
            bool side = false;
            for (int j = 0; j < 5; ++j)
                if (pair_key(map[x], map[y]) == pair_key(a[j], a[(j + 1) % 5])) side = true;
            if (!side) seam_chords.push_back(pair_key(map[x], map[y]));
        }
    if (!seam_chords.empty()) {
        auto keys = edge_keys(p1);
        for (auto k : seam_chords)
            if (keys.count(k)) throw GlueConflict("seam chord on both sides");
    }

    int next = p1.n;
    for (Vertex v = 0; v < p2.n; ++v)
        if (map[v] < 0) map[v] = next++;
    p1.n = next;
    p1.faces.erase(p1.faces.begin() + f1);
    for (int i = 0; i < p2.face_count(); ++i) {
        if (i == f2) continue;
        auto f = p2.faces[i];
        if (mirror) std::reverse(f.begin(), f.end());
        for (auto& v : f) v = map[v];
        p1.faces.push_back(f);
    }
}

Pentangulation glue(const Pentangulation& p1, int f1, const Pentangulation& p2, int f2, int alignment) {
    Pentangulation out = p1;
    glue_into(out, f1, p2, f2, alignment);
    return out;
}

Pentangulation random_pentangulation(int k, std::uint64_t seed, int retry_budget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::mt19937_64 rng(seed);
    const Pentangulation unit = dodecahedron();
    Pentangulation p = unit;
    for (int step = 1; step < k; ++step) {
        bool done = false;
        for (int attempt = 0; attempt < retry_budget && !done; ++attempt) {
            std::uniform_int_distribution<int> face(0, p.face_count() - 1), align(0, 9);
            int f = face(rng), al = align(rng);
            try {
                glue_into(p, f, unit, 0, al);
                done = true;
            } catch (const GlueConflict&) {
            }
        }
        if (!done) throw RetryBudgetExceeded("glue retry budget exhausted");
    }
    return p;
}

Pentangulation relabel(const Pentangulation& p, std::uint64_t seed) {
    std::vector<Vertex> perm(p.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Pentangulation q = p;
    for (auto& f : q.faces)
        for (auto& v : f) v = perm[v];
    return q;
}

std::vector<std::pair<Vertex, Vertex>> edges_of(const Pentangulation& p) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& f : p.faces)
        for (int i = 0; i < 5; ++i) {
            Vertex x = f[i], y = f[(i + 1) % 5];
            if (x < y) out.emplace_back(x, y);
            else out.emplace_back(y, x);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Vertex>> rotation_of(const Pentangulation& p) {
    // for each face walk (..., a, b, c, ...) the neighbor after c around b is a
    std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(p.n);
    for (const auto& f : p.faces)
        for (int i = 0; i < 5; ++i) {
            Vertex a = f[(i + 4) % 5], b = f[i], c = f[(i + 1) % 5];
            if (a < 0 || b < 0 || c < 0 || a >= p.n || b >= p.n || c >= p.n)
                throw ValidationFailure("rotation");
            succ[b].emplace_back(c, a);
        }
    std::vector<std::vector<Vertex>> rot(p.n);
    for (Vertex v = 0; v < p.n; ++v) {
        auto& s = succ[v];
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i].first == s[i - 1].first) throw ValidationFailure("rotation");
        if (s.empty()) continue;
        Vertex cur = s[0].first;
        for (std::size_t k = 0; k < s.size(); ++k) {
            rot[v].push_back(cur);
            auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(cur, -1));
            if (it == s.end() || it->first != cur) throw ValidationFailure("rotation");
            cur = it->second;
        }
        if (cur != s[0].first) throw ValidationFailure("rotation");
        std::vector<Vertex> sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ValidationFailure("rotation");
    }
    return rot;
}

Pentangulation from_rotation(int n, const std::vector<std::vector<Vertex>>& ccw) {
    if (static_cast<int>(ccw.size()) != n) throw ValidationFailure("rotation");
    // position of each neighbor in the rotation of v
    std::vector<std::vector<std::pair<Vertex, int>>> pos(n);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(ccw[v].size()); ++i) {
            Vertex w = ccw[v][i];
            if (w < 0 || w >= n || w == v) throw ValidationFailure("rotation");
            pos[v].emplace_back(w, i);
        }
        std::sort(pos[v].begin(), pos[v].end());
        for (std::size_t i = 1; i < pos[v].size(); ++i)
            if (pos[v][i].first == pos[v][i - 1].first) throw ValidationFailure("simple");
    }
    auto where = [&](Vertex v, Vertex w) {
        auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::make_pair(w, -1));
        if (it == pos[v].end() || it->first != w) throw ValidationFailure("rotation");
        return it->second;
    };
    std::set<std::pair<Vertex, Vertex>> used;
    Pentangulation p;
    p.n = n;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b0 : ccw[a]) {
            if (used.count({a, b0})) continue;
            std::vector<Vertex> walk;
            Vertex x = a, y = b0;
            while (!used.count({x, y})) {
                used.insert({x, y});
                walk.push_back(x);
                const auto& r = ccw[y];
                int k = static_cast<int>(r.size());
                Vertex z = r[(where(y, x) + k - 1) % k];
                x = y;
                y = z;
            }
            if (x != a || y != b0 || walk.size() != 5) throw ValidationFailure("face-length");
            p.faces.push_back({walk[0], walk[1], walk[2], walk[3], walk[4]});
        }
    return p;
}

void validate(const Pentangulation& p) {
    for (const auto& f : p.faces) {
        for (int i = 0; i < 5; ++i) {
            if (f[i] < 0 || f[i] >= p.n) throw ValidationFailure("rotation");
            for (int j = i + 1; j < 5; ++j)
                if (f[i] == f[j]) throw ValidationFailure("simple");
        }
    }
    std::set<std::pair<Vertex, Vertex>> darts;
    for (const auto& f : p.faces)
        for (int i = 0; i < 5; ++i)
            if (!darts.insert({f[i], f[(i + 1) % 5]}).second) throw ValidationFailure("simple");
    for (auto [a, b] : darts)
        if (!darts.count({b, a})) throw ValidationFailure("rotation");
    auto rot = rotation_of(p);

    const auto edges = edges_of(p);
    const int m = static_cast<int>(edges.size());
    if (p.n - m + p.face_count() != 2) throw ValidationFailure("euler");
    Graph g = build_graph(p.n, edges);
    std::vector<char> seen(p.n, 0);
    std::vector<Vertex> stack;
    if (p.n > 0) {
        stack.push_back(0);
        seen[0] = 1;
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.inc[v]) {
            Vertex w = g.other(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 0) > 0) throw ValidationFailure("connected");

    EdgeMap em(g);
    PlanarEmbedding emb;
    emb.rot.assign(p.n, {});
    for (Vertex v = 0; v < p.n; ++v)
        for (Vertex w : rot[v]) emb.rot[v].push_back(em.find(v, w));
    trace_faces(g, emb);
    if (emb.face_count() != p.face_count()) throw ValidationFailure("euler");
    if (p.n < 4 || !faces_meet_properly(g, emb)) throw ValidationFailure("3-connected");
}

Saturated saturate(const Pentangulation& p) {
    auto edges = edges_of(p);
    std::unordered_set<std::uint64_t> present;
    for (auto [a, b] : edges) present.insert(pair_key(a, b));
    for (const auto& f : p.faces)
        for (int i = 0; i < 5; ++i) {
            Vertex x = f[i], y = f[(i + 2) % 5];
            if (!present.insert(pair_key(x, y)).second)
                throw SaturationConflict("chord (" + std::to_string(x) + "," + std::to_string(y) +
                                         ") already present");
            edges.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(edges.begin(), edges.end());

    Saturated out;
    out.graph = build_graph(p.n, edges);
    const Graph& g = out.graph;
    EdgeMap em(g);
    auto rot = rotation_of(p);
    std::vector<std::vector<EdgeId>> base(p.n);
    for (Vertex v = 0; v < p.n; ++v)
        for (Vertex w : rot[v]) base[v].push_back(em.find(v, w));

    RotationScheme& s = out.scheme;
    s.n = g.n;
    s.edges = g.edges;
    s.crossings.assign(g.m(), {});
    std::vector<std::vector<EdgeId>> insert_after(2 * g.m());
    for (const auto& f : p.faces) place_pentagram(g, em, f, insert_after, s.crossings);
    s.rot = splice_rotations(g, base, insert_after);
    return out;
}

const char* to_string(MutationKind k) {
    switch (k) {
    case MutationKind::EdgeSwap: return "edge-swap";
    case MutationKind::DegreeBreaker: return "degree-breaker";
    case MutationKind::ChordRetarget: return "chord-retarget";
    case MutationKind::CrossingOverload: return "crossing-overload";
    case MutationKind::SeamScramble: return "seam-scramble";
    }
    return "unknown";
}

std::optional<MutationKind> parse_mutation_kind(const std::string& s) {
    for (MutationKind k : kAllMutations)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

namespace {

struct MutableGraph {
    int n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::unordered_set<std::uint64_t> keys;
    std::vector<std::vector<Vertex>> adj;

    explicit MutableGraph(const Graph& g) : n(g.n), edges(g.edges), adj(g.n) {
        for (auto [a, b] : edges) {
            keys.insert(pair_key(a, b));
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    bool has(Vertex a, Vertex b) const { return keys.count(pair_key(a, b)) > 0; }
    void remove(std::size_t i) {
        auto [a, b] = edges[i];
        keys.erase(pair_key(a, b));
        adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
        adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
        edges.erase(edges.begin() + static_cast<long>(i));
    }
    void add(Vertex a, Vertex b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
        keys.insert(pair_key(a, b));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Graph build() const { return build_graph(n, edges); }
};

template <typename Rng>
int pick(Rng& rng, int size) {
    return std::uniform_int_distribution<int>(0, size - 1)(rng);
}

template <typename Rng>
bool add_random_non_edge(MutableGraph& mg, Rng& rng, Vertex fixed = -1,
                         std::pair<Vertex, Vertex> removed = {-1, -1}) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vertex a = fixed >= 0 ? fixed : pick(rng, mg.n);
        Vertex b = pick(rng, mg.n);
        if (std::pair<Vertex, Vertex>(std::minmax(a, b)) == removed) continue;
        if (a != b && !mg.has(a, b)) {
            mg.add(a, b);
            return true;
        }
    }
    return false;
}

std::vector<int> distances_from(const MutableGraph& mg, Vertex s) {
    std::vector<int> dist(mg.n, -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : mg.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

Graph mutate(const Graph& g, MutationKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(kind) + 1)));
    MutableGraph mg(g);
    if (mg.edges.empty() || mg.n < 4) return g;
    switch (kind) {
    case MutationKind::EdgeSwap: {
        int i = pick(rng, static_cast<int>(mg.edges.size()));
        auto removed = mg.edges[i];
        mg.remove(i);
        add_random_non_edge(mg, rng, -1, removed);
        break;
    }
    case MutationKind::DegreeBreaker: {
        std::vector<std::size_t> preferred;
        for (std::size_t i = 0; i < mg.edges.size(); ++i)
            if (mg.adj[mg.edges[i].second].size() >= 10 || mg.adj[mg.edges[i].first].size() >= 10)
                preferred.push_back(i);
        std::size_t i = preferred.empty() ? pick(rng, static_cast<int>(mg.edges.size()))
                                          : preferred[pick(rng, static_cast<int>(preferred.size()))];
        auto [a, b] = mg.edges[i];
        if (mg.adj[a].size() > mg.adj[b].size()) std::swap(a, b);
        auto removed = mg.edges[i];
        mg.remove(i);
        add_random_non_edge(mg, rng, a, removed);
        break;
    }
    case MutationKind::ChordRetarget: {
        DegeneracyOrder d = degeneracy_order(g);
        auto counts = count_common_neighbors(g, d);
        std::vector<std::size_t> chords;
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] < kPlanarThreshold) chords.push_back(i);
        std::size_t i = chords.empty() ? pick(rng, g.m()) : chords[pick(rng, static_cast<int>(chords.size()))];
        Vertex a = g.edges[i].first;
        // remove by value: indices in mg coincide with g before any edit
        mg.remove(i);
        auto dist = distances_from(mg, a);
        std::vector<Vertex> two;
        for (Vertex v = 0; v < mg.n; ++v)
            if (dist[v] == 2 && v != g.edges[i].second) two.push_back(v);
        if (two.empty()) add_random_non_edge(mg, rng, a, g.edges[i]);
        else mg.add(a, two[pick(rng, static_cast<int>(two.size()))]);
        break;
    }
    case MutationKind::CrossingOverload: {
        Vertex a = pick(rng, mg.n);
        auto dist = distances_from(mg, a);
        int far = *std::max_element(dist.begin(), dist.end());
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < mg.n; ++v)
            if (dist[v] == far && far >= 2) cand.push_back(v);
        int i = pick(rng, static_cast<int>(mg.edges.size()));
        auto removed = mg.edges[i];
        mg.remove(i);
        Vertex target = cand.empty() ? -1 : cand[pick(rng, static_cast<int>(cand.size()))];
        if (target < 0 || mg.has(a, target) || std::pair<Vertex, Vertex>(std::minmax(a, target)) == removed) {
            add_random_non_edge(mg, rng, -1, removed);
        } else {
            mg.add(a, target);
        }
        break;
    }
    case MutationKind::SeamScramble: {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            int i = pick(rng, static_cast<int>(mg.edges.size()));
            int j = pick(rng, static_cast<int>(mg.edges.size()));
            auto [a, b] = mg.edges[i];
            auto [c, d] = mg.edges[j];
            if (rng() & 1) std::swap(c, d);
            if (i == j || a == c || a == d || b == c || b == d) continue;
            if (mg.has(a, d) || mg.has(c, b)) continue;
            mg.remove(std::max(i, j));
            mg.remove(std::min(i, j));
            mg.add(a, d);
            mg.add(c, b);
            break;
        }
        break;
    }
    }
    return mg.build();
}

std::string to_planar_code(const Pentangulation& p) {
    auto rot = rotation_of(p);
    std::string out = ">>planar_code<<";
    const bool wide = p.n >= 256;
    auto put = [&](int x) {
        if (wide) {
            out.push_back(static_cast<char>(x & 0xff));
            out.push_back(static_cast<char>((x >> 8) & 0xff));
        } else {
            out.push_back(static_cast<char>(x));
        }
    };
    if (wide) out.push_back('\0');
    put(p.n);
    for (Vertex v = 0; v < p.n; ++v) {
        for (auto it = rot[v].rbegin(); it != rot[v].rend(); ++it) put(*it + 1);
        put(0);
    }
    return out;
}

Pentangulation import_planar_code(const std::string& bytes) {
    std::size_t pos = 0;
    const std::string header = ">>planar_code<<";
    if (bytes.compare(0, header.size(), header) == 0) pos = header.size();
    auto byte = [&]() -> int {
        if (pos >= bytes.size()) throw ParseError("planar_code: truncated at byte " + std::to_string(pos));
        return static_cast<unsigned char>(bytes[pos++]);
    };
    bool wide = false;
    int n = byte();
    if (n == 0) {
        wide = true;
        n = byte();
        n |= byte() << 8;
    }
    auto entry = [&]() -> int {
        if (!wide) return byte();
        int lo = byte();
        return lo | (byte() << 8);
    };
    if (n < 1) throw ParseError("planar_code: empty graph");
    std::vector<std::vector<Vertex>> ccw(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> cw;
        for (int x = entry(); x != 0; x = entry()) {
            if (x > n) throw ParseError("planar_code: neighbor out of range at vertex " + std::to_string(v + 1));
            cw.push_back(x - 1);
        }
        ccw[v].assign(cw.rbegin(), cw.rend());
    }
    Pentangulation p = from_rotation(n, ccw);
    validate(p);
    return p;
}

std::string to_rotation_text(const Pentangulation& p) {
    auto rot = rotation_of(p);
    std::string out = std::to_string(p.n) + "\n";
    for (const auto& r : rot) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(r[i]);
        }
        out += '\n';
    }
    return out;
}

Pentangulation import_rotation_text(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line[0] != '#') lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("rotation text: missing vertex count");
    int n = 0;
    try {
        n = std::stoi(lines[0]);
    } catch (const std::exception&) {
        throw ParseError("rotation text: line 1: bad vertex count");
    }
    if (n < 1 || static_cast<int>(lines.size()) != n + 1)
        throw ParseError("rotation text: expected " + std::to_string(n) + " rotation lines");
    std::vector<std::vector<Vertex>> ccw(n);
    for (int v = 0; v < n; ++v) {
        std::size_t i = 0;
        const std::string& line = lines[v + 1];
        while (i < line.size()) {
            while (i < line.size() && line[i] == ' ') ++i;
            if (i >= line.size()) break;
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(line.substr(i), &used);
            } catch (const std::exception&) {
                throw ParseError("rotation text: line " + std::to_string(v + 2) + ": bad entry");
            }
            ccw[v].push_back(x);
            i += used;
        }
    }
    Pentangulation p = from_rotation(n, ccw);
    validate(p);
    return p;
}

} // namespace pentarec
