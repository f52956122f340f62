#include "pentarec/crossbat.hpp"

#include <algorithm>

namespace pentarec {

CrossBatPair crossbat_template(int a, int b) {
    using P = CrossBatPair;
    static const auto table = [] {
        std::array<std::array<P, 10>, 10> t{};
        for (auto& row : t) row.fill(P::None);
        auto set = [&](int x, int y, P p) { t[x][y] = t[y][x] = p; };
        set(kU, kU2, P::Planar);
        for (int hub : {kU, kU2}) {
            for (int r : {kX, kX2, kY, kY2, kV2, kW2}) set(hub, r, P::Planar);
            set(hub, kV, P::Crossing);
            set(hub, kW, P::Crossing);
        }
        set(kV, kX, P::Planar);
        set(kV, kX2, P::Planar);
        set(kW, kY, P::Planar);
        set(kW, kY2, P::Planar);
        set(kX, kV2, P::Planar);
        set(kX2, kV2, P::Planar);
        set(kY, kW2, P::Planar);
        set(kY2, kW2, P::Planar);
        set(kV2, kW2, P::Planar);
        set(kX, kY, P::Crossing);
        set(kX2, kY2, P::Crossing);
        set(kX, kW2, P::Crossing);
        set(kX2, kW2, P::Crossing);
        set(kY, kV2, P::Crossing);
        set(kY2, kV2, P::Crossing);
        set(kX, kX2, P::Either);
        set(kY, kY2, P::Either);
        set(kV, kV2, P::Optional);
        set(kW, kW2, P::Optional);
        return t;
    }();
    return table[a][b];
}

bool matches_crossbat(const std::array<Vertex, 10>& role, const DegeneracyOrder& d,
                      const EdgeClassification& cls) {
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            if (role[a] == role[b]) return false;
            EdgeId e = edge_between(d, role[a], role[b]);
            switch (crossbat_template(a, b)) {
            case CrossBatPair::None:
                if (e != kNoEdge) return false;
                break;
            case CrossBatPair::Planar:
                if (e == kNoEdge || !cls.planar(e)) return false;
                break;
            case CrossBatPair::Crossing:
                if (e == kNoEdge || !cls.crossing(e)) return false;
                break;
            case CrossBatPair::Either:
                if (e == kNoEdge) return false;
                break;
            case CrossBatPair::Optional:
                break;
            }
        }
    return true;
}

std::vector<CrossBatInstance> find_crossbat_instances(const Graph& g, const DegeneracyOrder& d,
                                                      const EdgeClassification& cls) {
    std::vector<CrossBatInstance> out;
    for (EdgeId base = 0; base < g.m(); ++base) {
        auto [a, b] = g.edges[base];
        if (!cls.planar(base) || cls.common[base] != 8 || g.degree(a) != 9 || g.degree(b) != 9) continue;

        std::vector<Vertex> s8;
        for (EdgeId e : g.inc[a])
            if (g.other(e, a) != b) s8.push_back(g.other(e, a));
        auto inner_degree = [&](Vertex x, const std::vector<Vertex>& within) {
            int c = 0;
            for (Vertex y : within)
                if (y != x && adjacent(d, x, y)) ++c;
            return c;
        };

        std::vector<Vertex> ends, s;
        for (Vertex x : s8) {
            int k = inner_degree(x, s8);
            if (k == 2 || k == 3) ends.push_back(x);
            else s.push_back(x);
        }
        if (ends.size() != 2) continue;
        std::vector<Vertex> hubs;
        for (Vertex x : s)
            if (inner_degree(x, s) == 5) hubs.push_back(x);
        if (hubs.size() != 2) continue;

        Vertex v = std::min(ends[0], ends[1]), w = std::max(ends[0], ends[1]);
        std::vector<Vertex> xs;
        for (Vertex x : s)
            if (x != hubs[0] && x != hubs[1] && adjacent(d, v, x)) xs.push_back(x);
        if (xs.size() != 2) continue;

        auto planar_to_both = [&](Vertex h) {
            for (Vertex x : xs) {
                EdgeId e = edge_between(d, h, x);
                if (e == kNoEdge || !cls.planar(e)) return false;
            }
            return true;
        };
        Vertex v2 = hubs[0], w2 = hubs[1];
        if (!planar_to_both(v2)) std::swap(v2, w2);
        if (!planar_to_both(v2)) continue;

        Vertex x = std::min(xs[0], xs[1]), x2 = std::max(xs[0], xs[1]);
        std::vector<Vertex> ys;
        for (Vertex y : s)
            if (y != x && y != x2 && y != v2 && y != w2) ys.push_back(y);
        if (ys.size() != 2) continue;
        Vertex y = ys[0], y2 = ys[1];
        if (!adjacent(d, x, y)) std::swap(y, y2);

        CrossBatInstance inst;
        inst.base = base;
        inst.role = {std::min(a, b), std::max(a, b), v, w, x, x2, y, y2, v2, w2};
        if (!matches_crossbat(inst.role, d, cls)) continue;
        inst.has_vv2 = adjacent(d, v, v2);
        inst.has_ww2 = adjacent(d, w, w2);
        out.push_back(inst);
    }
    return out;
}

FixStatus fix_crossbat(const CrossBatInstance& inst, const DegeneracyOrder& d, EdgeClassification& cls) {
    FixStatus status = FixStatus::Applied;
    for (int r : {kX, kY}) {
        EdgeId e = edge_between(d, inst.role[kU], inst.role[r]);
        if (cls.crossing(e)) {
            status = FixStatus::AlreadyReclassified;
            continue;
        }
        cls.relabel(e, EdgeClass::ClearlyCrossing, ReclassCause::CrossbatFix);
    }
    return status;
}

} // namespace pentarec
