#ifndef PENTAREC_CLASSIFY_HPP
#define PENTAREC_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentarec/graph.hpp"
#include "pentarec/reject.hpp"

namespace pentarec {

enum class PreflightReason { None, EdgeCount, Residue, Degeneracy, MinDegree, Divisibility };
const char* to_string(PreflightReason r);

struct PreflightReport {
    int n = 0;
    int m = 0;
    int n_mod_3 = 0;
    int degeneracy = 0;
    int min_degree = 0;
    bool degrees_divisible_by_3 = false;
    PreflightReason reason = PreflightReason::None;
    std::string witness;

    bool pass() const { return reason == PreflightReason::None; }
    Rejection rejection() const { return {"preflight", to_string(reason), witness}; }
};

// Checks, in order: edge count 5n-10, n mod 3 == 2, degeneracy <= 9,
// minimum degree >= 9, every degree divisible by 3.
PreflightReport preflight(const Graph& g, const DegeneracyOrder& d);

// |N(u) ∩ N(v)| for every edge, by triangle enumeration over back-lists.
std::vector<int> count_common_neighbors(const Graph& g, const DegeneracyOrder& d);

enum class EdgeClass : std::uint8_t { PotentiallyPlanar, ClearlyCrossing };
enum class ReclassCause : std::uint8_t { CrossbatFix, Triangulation };

struct Reclassification {
    EdgeId edge;
    EdgeClass from;
    EdgeClass to;
    ReclassCause cause;
};

inline constexpr int kPlanarThreshold = 6;

struct EdgeClassification {
    std::vector<EdgeClass> label;
    std::vector<int> common;
    std::vector<Reclassification> log;

    bool planar(EdgeId e) const { return label[e] == EdgeClass::PotentiallyPlanar; }
    bool crossing(EdgeId e) const { return label[e] == EdgeClass::ClearlyCrossing; }
    int count(EdgeClass c) const;
    void relabel(EdgeId e, EdgeClass to, ReclassCause cause);
};

EdgeClassification classify_edges(std::vector<int> counts);

} // namespace pentarec

#endif
