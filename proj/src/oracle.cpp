#include "pentarec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace pentarec {

namespace {

struct Member {
    std::array<Vertex, 5> cycle;
    std::array<int, 5> side;  // edge ids of the boundary
    std::array<int, 5> chord; // edge ids of the interior
};

class Search {
public:
    explicit Search(const Graph& g) : n_(g.n), m_(g.m()) {
        adj_.assign(n_, 0);
        id_.assign(n_ * n_, -1);
        for (EdgeId e = 0; e < m_; ++e) {
            auto [a, b] = g.edges[e];
            adj_[a] |= std::uint64_t{1} << b;
            adj_[b] |= std::uint64_t{1} << a;
            id_[a * n_ + b] = id_[b * n_ + a] = e;
        }
        never_side_.assign(m_, 0);
        for (EdgeId e = 0; e < m_; ++e) {
            auto [a, b] = g.edges[e];
            never_side_[e] = std::popcount(adj_[a] & adj_[b]) < 6;
        }
        enumerate_members();
        chord_.assign(m_, 0);
        side_.assign(m_, 0);
    }

    bool run(std::vector<std::array<Vertex, 5>>& faces, long& nodes) {
        bool ok = dfs();
        nodes = nodes_;
        if (ok)
            for (int i : chosen_) faces.push_back(members_[i].cycle);
        return ok;
    }

private:
    void enumerate_members() {
        by_edge_.assign(m_, {});
        for (Vertex a = 0; a < n_; ++a) {
            std::uint64_t c1 = adj_[a] & ~((std::uint64_t{2} << a) - 1);
            for (; c1; c1 &= c1 - 1) {
                Vertex b = std::countr_zero(c1);
                std::uint64_t c2 = c1 & adj_[b] & ~((std::uint64_t{2} << b) - 1);
                for (; c2; c2 &= c2 - 1) {
                    Vertex c = std::countr_zero(c2);
                    std::uint64_t c3 = c2 & adj_[c] & ~((std::uint64_t{2} << c) - 1);
                    for (; c3; c3 &= c3 - 1) {
                        Vertex d = std::countr_zero(c3);
                        std::uint64_t c4 = c3 & adj_[d] & ~((std::uint64_t{2} << d) - 1);
                        for (; c4; c4 &= c4 - 1) add_clique({a, b, c, d, static_cast<Vertex>(std::countr_zero(c4))});
                    }
                }
            }
        }
    }

    void add_clique(std::array<Vertex, 5> k) {
        // the 12 distinct 5-cycles: fix k[0] first, permute the rest, keep one direction
        std::array<int, 4> rest{1, 2, 3, 4};
        do {
            if (rest[0] > rest[3]) continue;
            Member mb;
            mb.cycle = {k[0], k[rest[0]], k[rest[1]], k[rest[2]], k[rest[3]]};
            bool usable = true;
            for (int i = 0; i < 5; ++i) {
                mb.side[i] = edge(mb.cycle[i], mb.cycle[(i + 1) % 5]);
                mb.chord[i] = edge(mb.cycle[i], mb.cycle[(i + 2) % 5]);
                if (never_side_[mb.side[i]]) usable = false;
            }
            if (!usable) continue;
            int id = static_cast<int>(members_.size());
            members_.push_back(mb);
            for (int i = 0; i < 5; ++i) {
                by_edge_[mb.side[i]].push_back(id);
                by_edge_[mb.chord[i]].push_back(id);
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    int edge(Vertex a, Vertex b) const { return id_[a * n_ + b]; }

    bool fits(const Member& mb) const {
        for (int i = 0; i < 5; ++i) {
            if (chord_[mb.side[i]] || side_[mb.side[i]] >= 2) return false;
            if (chord_[mb.chord[i]] || side_[mb.chord[i]]) return false;
        }
        return true;
    }

    void apply(const Member& mb, int delta) {
        for (int i = 0; i < 5; ++i) {
            side_[mb.side[i]] += delta;
            chord_[mb.chord[i]] += delta;
        }
    }

    bool dfs() {
        ++nodes_;
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        for (EdgeId e = 0; e < m_; ++e) {
            if (chord_[e] || side_[e] == 2) continue;
            std::size_t c = 0;
            for (int id : by_edge_[e])
                if (fits(members_[id])) ++c;
            if (c < best_count) {
                best_count = c;
                best = e;
                if (c == 0) return false;
            }
        }
        if (best < 0) return global_check();
        for (int id : by_edge_[best]) {
            const Member& mb = members_[id];
            if (!fits(mb)) continue;
            apply(mb, +1);
            chosen_.push_back(id);
            if (dfs()) return true;
            chosen_.pop_back();
            apply(mb, -1);
        }
        return false;
    }

    bool global_check() const {
        const int F = static_cast<int>(chosen_.size());
        std::vector<std::vector<std::pair<Vertex, Vertex>>> link(n_);
        for (int id : chosen_) {
            const auto& c = members_[id].cycle;
            for (int i = 0; i < 5; ++i) link[c[i]].emplace_back(c[(i + 4) % 5], c[(i + 1) % 5]);
        }
        int sides = 0;
        for (EdgeId e = 0; e < m_; ++e) sides += side_[e] ? 1 : 0;
        for (Vertex v = 0; v < n_; ++v) {
            const auto& l = link[v];
            if (l.size() < 3) return false;
            // the link pairs must chain into one cycle through all neighbors
            std::set<Vertex> nbrs;
            for (auto [a, c] : l) {
                nbrs.insert(a);
                nbrs.insert(c);
            }
            if (nbrs.size() != l.size()) return false;
            std::vector<char> used(l.size(), 0);
            Vertex start = l[0].first, cur = l[0].second;
            used[0] = 1;
            std::size_t steps = 1;
            while (cur != start) {
                bool moved = false;
                for (std::size_t i = 0; i < l.size(); ++i) {
                    if (used[i]) continue;
                    if (l[i].first == cur || l[i].second == cur) {
                        used[i] = 1;
                        cur = l[i].first == cur ? l[i].second : l[i].first;
                        moved = true;
                        ++steps;
                        break;
                    }
                }
                if (!moved) return false;
            }
            if (steps != l.size()) return false;
        }
        // connectivity of the boundary graph
        std::vector<char> seen(n_, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [a, c] : link[v])
                for (Vertex w : {a, c})
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
        }
        if (reached != n_) return false;
        if (n_ - sides + F != 2) return false;
        // 3-connectivity: faces meet in nothing, a vertex, or a shared side
        for (int i = 0; i < F; ++i)
            for (int j = i + 1; j < F; ++j) {
                const auto& a = members_[chosen_[i]].cycle;
                const auto& b = members_[chosen_[j]].cycle;
                std::vector<Vertex> common;
                for (Vertex x : a)
                    if (std::find(b.begin(), b.end(), x) != b.end()) common.push_back(x);
                if (common.size() > 2) return false;
                if (common.size() == 2) {
                    int e = edge(common[0], common[1]);
                    const auto& ma = members_[chosen_[i]];
                    const auto& mb = members_[chosen_[j]];
                    bool in_a = std::find(ma.side.begin(), ma.side.end(), e) != ma.side.end();
                    bool in_b = std::find(mb.side.begin(), mb.side.end(), e) != mb.side.end();
                    if (!in_a || !in_b) return false;
                }
            }
        return true;
    }

    int n_, m_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> id_;
    std::vector<char> never_side_;
    std::vector<Member> members_;
    std::vector<std::vector<int>> by_edge_;
    std::vector<int> chord_, side_;
    std::vector<int> chosen_;
    long nodes_ = 0;
};

} // namespace

OracleResult oracle_recognize(const Graph& g) {
    OracleResult r;
    if (g.n > kOracleMaxVertices) {
        r.status = OracleResult::Status::TooLarge;
        return r;
    }
    // every candidate structure has exactly 5(n-2) edges
    if (g.n < 5 || g.m() != 5 * g.n - 10) return r;
    Search s(g);
    std::vector<std::array<Vertex, 5>> faces;
    if (s.run(faces, r.nodes)) {
        r.status = OracleResult::Status::Accept;
        for (auto& f : faces) {
            auto it = std::min_element(f.begin(), f.end());
            std::rotate(f.begin(), it, f.end());
            if (f[1] > f[4]) std::reverse(f.begin() + 1, f.end());
        }
        std::sort(faces.begin(), faces.end());
        r.faces = std::move(faces);
    }
    return r;
}

} // namespace pentarec
