#ifndef PENTAREC_VERIFY_HPP
#define PENTAREC_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pentarec/assemble.hpp"
#include "pentarec/graph.hpp"

namespace pentarec {

// Each crossing pair becomes a degree-4 dummy vertex (ids n..n+X-1) splitting
// both edges into segments.
struct Planarization {
    int real = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeId> origin; // original edge of each segment
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<int>> faces; // vertex walks, filled by the verifier
};

struct Verdict {
    bool valid = false;
    std::string reason;
    std::string detail;
    int planar_vertices = 0;
    int planar_edges = 0;
    int planar_faces = 0;
    Planarization planarization;

    explicit operator bool() const { return valid; }
};

// Checks, in order: rotations are permutations of each vertex's incident
// edges; at most two crossings per edge; crossing lists symmetric; no crossing
// between an edge and itself, a repeated partner, or a neighboring edge; the
// planarization traces into a connected plane map.
Verdict verify_scheme(const Graph& g, const RotationScheme& s);

// verify_scheme plus m = 5n - 10.
Verdict verify_optimal(const Graph& g, const RotationScheme& s);

} // namespace pentarec

#endif
