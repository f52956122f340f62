#include "pentarec/classify.hpp"

#include <algorithm>

namespace pentarec {

const char* to_string(PreflightReason r) {
    switch (r) {
    case PreflightReason::None: return "pass";
    case PreflightReason::EdgeCount: return "edge-count";
    case PreflightReason::Residue: return "residue";
    case PreflightReason::Degeneracy: return "degeneracy";
    case PreflightReason::MinDegree: return "min-degree";
    case PreflightReason::Divisibility: return "divisibility";
    }
    return "unknown";
}

PreflightReport preflight(const Graph& g, const DegeneracyOrder& d) {
    PreflightReport r;
    r.n = g.n;
    r.m = g.m();
    r.n_mod_3 = g.n % 3;
    r.degeneracy = d.degeneracy;
    r.min_degree = g.n > 0 ? g.degree(0) : 0;
    Vertex min_v = 0;
    Vertex indivisible = -1;
    for (Vertex v = 0; v < g.n; ++v) {
        if (g.degree(v) < r.min_degree) {
            r.min_degree = g.degree(v);
            min_v = v;
        }
        if (indivisible < 0 && g.degree(v) % 3 != 0) indivisible = v;
    }
    r.degrees_divisible_by_3 = indivisible < 0;

    const long expected = 5L * g.n - 10;
    if (r.m != expected) {
        r.reason = PreflightReason::EdgeCount;
        r.witness = "m=" + std::to_string(r.m) + ",expected=" + std::to_string(expected);
    } else if (r.n_mod_3 != 2) {
        r.reason = PreflightReason::Residue;
        r.witness = "n=" + std::to_string(g.n);
    } else if (r.degeneracy > 9) {
        r.reason = PreflightReason::Degeneracy;
        r.witness = "degeneracy=" + std::to_string(r.degeneracy);
    } else if (r.min_degree < 9) {
        r.reason = PreflightReason::MinDegree;
        r.witness = "v=" + std::to_string(min_v) + ",d=" + std::to_string(r.min_degree);
    } else if (!r.degrees_divisible_by_3) {
        r.reason = PreflightReason::Divisibility;
        r.witness = "v=" + std::to_string(indivisible) + ",d=" + std::to_string(g.degree(indivisible));
    }
    return r;
}

std::vector<int> count_common_neighbors(const Graph& g, const DegeneracyOrder& d) {
    std::vector<int> count(g.m(), 0);
    for (int i = g.n - 1; i >= 0; --i) {
        Vertex v = d.order[i];
        auto nb = d.back(v);
        auto ne = d.back_edges(v);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                EdgeId ab = edge_between(d, nb[a], nb[b]);
                if (ab == kNoEdge) continue;
                ++count[ne[a]];
                ++count[ne[b]];
                ++count[ab];
            }
        }
    }
    return count;
}

int EdgeClassification::count(EdgeClass c) const {
    return static_cast<int>(std::count(label.begin(), label.end(), c));
}

void EdgeClassification::relabel(EdgeId e, EdgeClass to, ReclassCause cause) {
    log.push_back({e, label[e], to, cause});
    label[e] = to;
}

EdgeClassification classify_edges(std::vector<int> counts) {
    EdgeClassification c;
    c.label.resize(counts.size());
    for (std::size_t e = 0; e < counts.size(); ++e)
        c.label[e] = counts[e] >= kPlanarThreshold ? EdgeClass::PotentiallyPlanar
                                                   : EdgeClass::ClearlyCrossing;
    c.common = std::move(counts);
    return c;
}

} // namespace pentarec
