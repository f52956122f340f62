#ifndef PENTAREC_TRIPLETS_HPP
#define PENTAREC_TRIPLETS_HPP

#include <array>
#include <optional>
#include <vector>

#include "pentarec/classify.hpp"
#include "pentarec/embed.hpp"
#include "pentarec/graph.hpp"
#include "pentarec/reject.hpp"

namespace pentarec {

// Three consecutive triangles f1, f, f2 around the apex u whose five vertices
// form a 5-clique: f1 = {u,w1,v1}, f = {u,w1,w2}, f2 = {u,w2,v2}. The
// crossing edges are e1 = (v1,w2), e2 = (v2,w1) and e = (v1,v2).
struct Triplet {
    int f1 = -1, f = -1, f2 = -1;
    Vertex u = -1, v1 = -1, w1 = -1, w2 = -1, v2 = -1;
    EdgeId e1 = kNoEdge, e2 = kNoEdge, e = kNoEdge;
    int g1 = -1, g2 = -1; // faces across (v1,w1) from f1 and across (v2,w2) from f2

    std::array<int, 3> faces() const { return {f1, f, f2}; }
    std::array<Vertex, 5> vertices() const { return {u, v1, w1, w2, v2}; }
    std::array<EdgeId, 3> crossing_edges() const { return {e1, e2, e}; }
    bool has_face(int x) const { return x == f1 || x == f || x == f2; }
    bool has_vertex(Vertex x) const { return x == u || x == v1 || x == w1 || x == w2 || x == v2; }
    bool has_edge(EdgeId x) const { return x == e1 || x == e2 || x == e; }
};

// The same triplet with the roles of (f1,v1,w1,e1) and (f2,v2,w2,e2) exchanged.
Triplet mirrored(const Triplet& t);
bool face_disjoint(const Triplet& a, const Triplet& b);
int shared_vertices(const Triplet& a, const Triplet& b);

enum class TripletLabel { Unlabeled, Facial, NonFacial, FacialForced };
const char* to_string(TripletLabel l);

struct TripletIndex {
    std::vector<Triplet> triplets;
    std::vector<std::vector<int>> by_face; // indexed by face id
    std::vector<std::vector<int>> by_edge; // indexed by edge id of G
    std::vector<TripletLabel> label;

    int size() const { return static_cast<int>(triplets.size()); }
    bool selected(int t) const {
        return label[t] == TripletLabel::Facial || label[t] == TripletLabel::FacialForced;
    }
};

// Size limits of the rival-cover search: below `exhaustive_limit` on both
// containing sets the search is exhaustive; a containing set of at least
// `guarantee_limit` members always holds a suitable triplet.
struct BatteryConfig {
    int exhaustive_limit = 82;
    int guarantee_limit = 63;
};

// Requires a triangulated embedding and its dual.
TripletIndex enumerate_triplets(const Graph& g, const DegeneracyOrder& d,
                                const PlanarEmbedding& emb, const DualGraph& dual,
                                const EdgeClassification& cls);

// Crossing edges in no triplet reject (first by edge id); crossing edges in
// exactly one triplet force it facial.
std::optional<Rejection> forced_fast_path(const Graph& g, const EdgeClassification& cls,
                                          TripletIndex& index);

// For a degree-9 vertex v of T, S = N(v) minus V(T).
// Fires if some x in S has at most one neighbor in S.
bool isolated_link_vertex(const Triplet& t, const Graph& g, const DegeneracyOrder& d);
// Fires if every x in S has at most three neighbors in S.
bool sparse_link(const Triplet& t, const Graph& g, const DegeneracyOrder& d);

// One orientation each; `self` is the id of t in the index.
bool double_clique_conflict(int self, const Triplet& t, const TripletIndex& index);
bool rival_cover_conflict(int self, const Triplet& t, const TripletIndex& index,
                          const BatteryConfig& cfg);
// Reference version of rival_cover_conflict that always enumerates all tuples.
bool rival_cover_conflict_exhaustive(int self, const Triplet& t, const TripletIndex& index);

// Facial iff none of the checks fires in either orientation.
TripletLabel label_triplet(int self, const TripletIndex& index, const Graph& g,
                           const DegeneracyOrder& d, const BatteryConfig& cfg);

// Labels every triplet not already forced.
void label_all(TripletIndex& index, const Graph& g, const DegeneracyOrder& d,
               const BatteryConfig& cfg);

} // namespace pentarec

#endif
