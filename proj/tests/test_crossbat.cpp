#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pentarec/crossbat.hpp"

using namespace pentarec;

namespace {

struct Classified {
    Graph g;
    DegeneracyOrder d;
    EdgeClassification cls;
    std::vector<bool> crossing;
};

Classified classify(Graph g) {
    Classified c{std::move(g), {}, {}, {}};
    c.d = degeneracy_order(c.g);
    c.cls = classify_edges(count_common_neighbors(c.g, c.d));
    for (int e = 0; e < c.g.m(); ++e) c.crossing.push_back(c.cls.crossing(e));
    return c;
}

// Library detections and exhaustive assignments agree: same base edges, and
// each detected role array is one of the exhaustive matches for its base.
void check_agreement(const Classified& c) {
    auto found = find_crossbat_instances(c.g, c.d, c.cls);
    auto brute = oracle::crossbat_assignments(c.g, c.crossing);
    REQUIRE(found.size() == brute.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(c.g.edges[found[i].base] == brute[i].first);
        const auto& options = brute[i].second;
        CHECK(std::find(options.begin(), options.end(), found[i].role) != options.end());
        for (const auto& role : options) CHECK(matches_crossbat(role, c.d, c.cls));
    }
}

} // namespace

TEST_CASE("template is symmetric and matches the reference core") {
    Graph core = oracle::crossbat_core(true);
    EdgeMap em(core);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            if (a == b) continue;
            CHECK(crossbat_template(a, b) == crossbat_template(b, a));
            CHECK(em.has(a, b) == (crossbat_template(a, b) != CrossBatPair::None));
        }
    CHECK(core.m() == 36);
    CHECK(oracle::crossbat_core(false).m() == 34);
}

TEST_CASE("saturated dodecahedron has no CROSS-BAT") {
    auto c = classify(fixture::dodeca_sat().graph);
    CHECK(find_crossbat_instances(c.g, c.d, c.cls).empty());
    CHECK(oracle::crossbat_assignments(c.g, c.crossing).empty());
}

TEST_CASE("standalone CROSS-BAT core is not detected") {
    for (bool optional : {false, true}) {
        auto c = classify(oracle::crossbat_core(optional));
        CHECK(find_crossbat_instances(c.g, c.d, c.cls).empty());
        CHECK(oracle::crossbat_assignments(c.g, c.crossing).empty());
        // in isolation (v,x) has too few common neighbors to be potentially planar
        EdgeId vx = edge_between(c.d, oracle::V, oracle::X);
        CHECK(c.cls.common[vx] < kPlanarThreshold);
        CHECK(c.cls.crossing(vx));
    }
}

TEST_CASE("host fixture has exactly the planted instance") {
    auto c = classify(saturate(crossbat_host()).graph);
    auto found = find_crossbat_instances(c.g, c.d, c.cls);
    REQUIRE(found.size() == 1);
    std::array<Vertex, 10> planted{0, 1, 6, 7, 2, 3, 4, 5, 8, 9};
    CHECK(found[0].role == planted);
    CHECK(found[0].has_vv2);
    CHECK(found[0].has_ww2);
    CHECK(c.g.edges[found[0].base] == std::pair{0, 1});
    check_agreement(c);
}

TEST_CASE("relabeled hosts agree with exhaustive search") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto c = classify(saturate(relabel(crossbat_host(), seed)).graph);
        CHECK(find_crossbat_instances(c.g, c.d, c.cls).size() == 1);
        check_agreement(c);
    }
}

TEST_CASE("fixing the planted instance logs two reclassifications") {
    auto c = classify(saturate(crossbat_host()).graph);
    auto found = find_crossbat_instances(c.g, c.d, c.cls);
    REQUIRE(found.size() == 1);
    CHECK(fix_crossbat(found[0], c.d, c.cls) == FixStatus::Applied);
    REQUIRE(c.cls.log.size() == 2);
    std::set<std::pair<Vertex, Vertex>> flipped;
    for (const auto& r : c.cls.log) {
        CHECK(r.from == EdgeClass::PotentiallyPlanar);
        CHECK(r.to == EdgeClass::ClearlyCrossing);
        CHECK(r.cause == ReclassCause::CrossbatFix);
        flipped.insert(c.g.edges[r.edge]);
    }
    CHECK(flipped == std::set<std::pair<Vertex, Vertex>>{{0, 2}, {0, 4}});
    CHECK(fix_crossbat(found[0], c.d, c.cls) == FixStatus::AlreadyReclassified);
    CHECK(c.cls.log.size() == 2);
}

TEST_CASE("no instances leave the classification unchanged") {
    auto c = classify(fixture::dodeca_sat().graph);
    auto before = c.cls.label;
    for (const auto& inst : find_crossbat_instances(c.g, c.d, c.cls)) fix_crossbat(inst, c.d, c.cls);
    CHECK(c.cls.label == before);
    CHECK(c.cls.log.empty());
}

TEST_CASE("two disjoint planted instances give four distinct log entries") {
    auto c = classify(saturate(fixture::double_crossbat_host()).graph);
    auto found = find_crossbat_instances(c.g, c.d, c.cls);
    REQUIRE(found.size() == 2);
    check_agreement(c);
    for (const auto& inst : found) CHECK(fix_crossbat(inst, c.d, c.cls) == FixStatus::Applied);
    REQUIRE(c.cls.log.size() == 4);
    std::set<EdgeId> edges;
    for (const auto& r : c.cls.log) edges.insert(r.edge);
    CHECK(edges.size() == 4);
}

TEST_CASE("a role array that violates the template is rejected") {
    auto c = classify(saturate(crossbat_host()).graph);
    std::array<Vertex, 10> planted{0, 1, 6, 7, 2, 3, 4, 5, 8, 9};
    CHECK(matches_crossbat(planted, c.d, c.cls));
    auto swapped = planted;
    std::swap(swapped[kV], swapped[kW]);
    CHECK_FALSE(matches_crossbat(swapped, c.d, c.cls));
}
