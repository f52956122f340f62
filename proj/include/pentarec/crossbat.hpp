#ifndef PENTAREC_CROSSBAT_HPP
#define PENTAREC_CROSSBAT_HPP

#include <array>
#include <vector>

#include "pentarec/classify.hpp"
#include "pentarec/graph.hpp"

namespace pentarec {

// Role slots of a CROSS-BAT configuration.
enum CrossBatRole { kU, kU2, kV, kW, kX, kX2, kY, kY2, kV2, kW2 };

struct CrossBatInstance {
    std::array<Vertex, 10> role{}; // indexed by CrossBatRole; kU2 is u', kX2 is x', ...
    EdgeId base = kNoEdge;         // (u, u')
    bool has_vv2 = false;          // optional edge (v, v')
    bool has_ww2 = false;          // optional edge (w, w')
};

// Expected relation between two role slots.
enum class CrossBatPair { None, Planar, Crossing, Either, Optional };
CrossBatPair crossbat_template(int a, int b);

// All configurations against the given classification, sorted by base edge.
std::vector<CrossBatInstance> find_crossbat_instances(const Graph& g, const DegeneracyOrder& d,
                                                      const EdgeClassification& cls);

// True iff the role assignment matches the template and classification.
bool matches_crossbat(const std::array<Vertex, 10>& role, const DegeneracyOrder& d,
                      const EdgeClassification& cls);

enum class FixStatus { Applied, AlreadyReclassified };

// Relabels (u,x) and (u,y) as clearly crossing.
FixStatus fix_crossbat(const CrossBatInstance& inst, const DegeneracyOrder& d, EdgeClassification& cls);

} // namespace pentarec

#endif
