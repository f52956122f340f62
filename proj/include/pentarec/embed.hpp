#ifndef PENTAREC_EMBED_HPP
#define PENTAREC_EMBED_HPP

#include <array>
#include <optional>
#include <vector>

#include "pentarec/classify.hpp"
#include "pentarec/graph.hpp"
#include "pentarec/reject.hpp"

namespace pentarec {

// Darts are directed edge occurrences: dart 2e runs first->second, 2e+1 the reverse.
inline int dart_of(const Graph& g, EdgeId e, Vertex tail) {
    return 2 * e + (g.edges[e].first == tail ? 0 : 1);
}
inline Vertex dart_tail(const Graph& g, int dart) {
    auto [a, b] = g.edges[dart >> 1];
    return (dart & 1) ? b : a;
}
inline Vertex dart_head(const Graph& g, int dart) {
    auto [a, b] = g.edges[dart >> 1];
    return (dart & 1) ? a : b;
}

// Combinatorial embedding of a spanning subgraph of g. Rotations are
// counter-clockwise and start at the edge to the smallest neighbor. Faces lie to
// the left of their darts, so bounded faces run counter-clockwise.
struct PlanarEmbedding {
    std::vector<std::vector<EdgeId>> rot;
    std::vector<std::vector<Vertex>> faces;
    std::vector<std::vector<EdgeId>> face_edges; // face_edges[f][i] joins faces[f][i], faces[f][i+1]
    std::vector<int> dart_face;                  // indexed by dart of g, -1 if edge absent
    std::vector<int> rot_pos;                    // indexed by dart: position of the edge in rot[tail]
    int outer_face = -1;

    int face_count() const { return static_cast<int>(faces.size()); }
};

// Some planar rotation system of the graph on n vertices with the given edges,
// as per-vertex lists of indices into `edges`; nullopt if not planar.
std::optional<std::vector<std::vector<int>>> planar_rotation(
    int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// Edge ids of g forming G_p.
std::vector<EdgeId> build_gp(const Graph& g, const EdgeClassification& cls);

// Next dart along the face to the left of `dart`.
int next_dart(const Graph& g, const PlanarEmbedding& emb, int dart);

// Recomputes rot_pos, faces, face_edges, dart_face and outer_face from rot.
void trace_faces(const Graph& g, PlanarEmbedding& emb);

struct EmbedOutcome {
    std::optional<PlanarEmbedding> embedding;
    std::optional<Rejection> reject;
};

// Rejects not-spanning, not-planar or not-3-connected (checked in that order);
// otherwise returns the unique embedding in canonical orientation.
EmbedOutcome check_planar_3connected(const Graph& g, const std::vector<EdgeId>& gp);

// True iff a connected embedding whose faces are all simple cycles (n >= 4) is
// 3-connected: any two faces meet in nothing, one vertex, or one shared edge.
bool faces_meet_properly(const Graph& g, const PlanarEmbedding& emb);

std::optional<Rejection> face_audit(const Graph& g, const DegeneracyOrder& d,
                                    const PlanarEmbedding& emb);

// Fans every 4- and 5-face from its minimum-id vertex. Chords become potentially
// planar (logged). Returns the number of chords added.
int triangulate(const Graph& g, const DegeneracyOrder& d, PlanarEmbedding& emb,
                EdgeClassification& cls);

struct DualGraph {
    std::vector<std::array<int, 3>> nbr;    // nbr[f][i]: face across face_edges[f][i]
    std::vector<std::array<EdgeId, 3>> via; // shared edge
    int arc_count() const { return static_cast<int>(nbr.size()) * 3 / 2; }
};

// Requires a triangulated embedding.
DualGraph dual(const Graph& g, const PlanarEmbedding& emb);

} // namespace pentarec

#endif
