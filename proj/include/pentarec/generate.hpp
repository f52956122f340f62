#ifndef PENTAREC_GENERATE_HPP
#define PENTAREC_GENERATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentarec/assemble.hpp"
#include "pentarec/graph.hpp"

namespace pentarec {

// Plane graph given by its faces, each a counter-clockwise 5-cycle (the outer
// face included, traversed with the rest of the plane on its right).
struct Pentangulation {
    int n = 0;
    std::vector<std::array<Vertex, 5>> faces;

    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return 5 * face_count() / 2; }
};

struct GlueConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SaturationConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RetryBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// what() is the violated invariant: face-length, rotation, simple, euler,
// connected, or 3-connected.
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pentangulation dodecahedron();

// Embeds p2 inside face f1 of p1 so that face f2 of p2 is identified with f1.
// alignment % 5 rotates the identification, alignment >= 5 mirrors p2 first.
// Vertices of p2 off the seam get ids p1.n, p1.n+1, ... in increasing order.
Pentangulation glue(const Pentangulation& p1, int f1, const Pentangulation& p2, int f2, int alignment);
void glue_into(Pentangulation& p1, int f1, const Pentangulation& p2, int f2, int alignment);

// k dodecahedra, each glued by its face 0 into a uniformly random face with a
// uniformly random alignment.
Pentangulation random_pentangulation(int k, std::uint64_t seed, int retry_budget = 64);

// Applies a seeded random vertex permutation.
Pentangulation relabel(const Pentangulation& p, std::uint64_t seed);

// Sorted edge list.
std::vector<std::pair<Vertex, Vertex>> edges_of(const Pentangulation& p);

// Counter-clockwise neighbor order of every vertex; throws ValidationFailure.
std::vector<std::vector<Vertex>> rotation_of(const Pentangulation& p);

// Faces traced from a counter-clockwise neighbor rotation.
Pentangulation from_rotation(int n, const std::vector<std::vector<Vertex>>& ccw);

// Throws ValidationFailure naming the first violated invariant.
void validate(const Pentangulation& p);

struct Saturated {
    Graph graph;
    RotationScheme scheme;
};

// Adds the five chords of every face. Edges of the result are sorted.
Saturated saturate(const Pentangulation& p);

enum class MutationKind { EdgeSwap, DegreeBreaker, ChordRetarget, CrossingOverload, SeamScramble };
inline constexpr std::array<MutationKind, 5> kAllMutations{
    MutationKind::EdgeSwap, MutationKind::DegreeBreaker, MutationKind::ChordRetarget,
    MutationKind::CrossingOverload, MutationKind::SeamScramble};
const char* to_string(MutationKind k);
std::optional<MutationKind> parse_mutation_kind(const std::string& s);

Graph mutate(const Graph& g, MutationKind kind, std::uint64_t seed);

// plantri planar_code: header, then per vertex its clockwise 1-based neighbors
// terminated by 0; entries are 2-byte little-endian when n >= 256.
std::string to_planar_code(const Pentangulation& p);
Pentangulation import_planar_code(const std::string& bytes);

// Text form: "n" on the first line, then one line per vertex listing its
// neighbors counter-clockwise.
std::string to_rotation_text(const Pentangulation& p);
Pentangulation import_rotation_text(const std::string& text);

// A pentangulation whose saturation contains a CROSS-BAT configuration.
Pentangulation crossbat_host();

} // namespace pentarec

#endif
