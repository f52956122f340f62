#ifndef PENTAREC_TESTS_FIXTURES_HPP
#define PENTAREC_TESTS_FIXTURES_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pentarec/classify.hpp"
#include "pentarec/embed.hpp"
#include "pentarec/generate.hpp"
#include "pentarec/graph.hpp"
#include "pentarec/triplets.hpp"

namespace fixture {

inline pentarec::Graph complete(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    return pentarec::build_graph(n, pairs);
}

inline pentarec::Graph triangle() { return pentarec::build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline pentarec::Pentangulation glued_pair() {
    return pentarec::glue(pentarec::dodecahedron(), 0, pentarec::dodecahedron(), 0, 0);
}

inline pentarec::Saturated dodeca_sat() { return pentarec::saturate(pentarec::dodecahedron()); }
inline pentarec::Saturated glued_pair_sat() { return pentarec::saturate(glued_pair()); }

// Two disjoint CROSS-BAT patches: the host glued into a copy of itself.
inline pentarec::Pentangulation double_crossbat_host() {
    pentarec::Pentangulation q = pentarec::crossbat_host();
    pentarec::glue_into(q, 4, pentarec::crossbat_host(), 27, 0);
    return q;
}

// Stages up to an enumerated (unlabeled) triplet index, without CROSS-BAT fixes.
struct Pipeline {
    pentarec::Graph g;
    pentarec::DegeneracyOrder d;
    pentarec::EdgeClassification cls;
    pentarec::PlanarEmbedding emb;
    pentarec::DualGraph dual;
    pentarec::TripletIndex index;
};

inline Pipeline run_to_triplets(pentarec::Graph g, std::optional<pentarec::EdgeClassification> cls = {}) {
    using namespace pentarec;
    Pipeline p;
    p.g = std::move(g);
    p.d = degeneracy_order(p.g);
    p.cls = cls ? *cls : classify_edges(count_common_neighbors(p.g, p.d));
    auto out = check_planar_3connected(p.g, build_gp(p.g, p.cls));
    if (!out.embedding) throw std::runtime_error(out.reject->line());
    p.emb = std::move(*out.embedding);
    triangulate(p.g, p.d, p.emb, p.cls);
    p.dual = dual(p.g, p.emb);
    p.index = enumerate_triplets(p.g, p.d, p.emb, p.dual, p.cls);
    return p;
}

} // namespace fixture

#endif
