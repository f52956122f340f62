#ifndef PENTAREC_ASSEMBLE_HPP
#define PENTAREC_ASSEMBLE_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentarec/classify.hpp"
#include "pentarec/embed.hpp"
#include "pentarec/graph.hpp"
#include "pentarec/reject.hpp"
#include "pentarec/triplets.hpp"

namespace pentarec {

// Counter-clockwise rotation of every vertex over all edges, plus for each
// edge the ordered edges it crosses, listed from its lower-id endpoint.
struct RotationScheme {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<EdgeId>> rot;
    std::vector<std::vector<EdgeId>> crossings;

    int crossing_pairs() const;
};

std::optional<Rejection> check_cover(const Graph& g, const PlanarEmbedding& emb,
                                     const TripletIndex& index, const EdgeClassification& cls);

// Records the five chords of the facial 5-clique with counter-clockwise
// boundary d: after the side (d[i], d[i+1]) at d[i] come the chords to d[i+2]
// and d[i+3]; the chord (d[i], d[i+2]) crosses (d[i+1], d[i+4]) and then
// (d[i+1], d[i+3]) on its way from d[i].
void place_pentagram(const Graph& g, const EdgeMap& em, const std::array<Vertex, 5>& d,
                     std::vector<std::vector<EdgeId>>& insert_after,
                     std::vector<std::vector<EdgeId>>& crossings);

// base[v] with insert_after[dart] spliced in after each edge; insert_after is
// indexed by the dart leaving v.
std::vector<std::vector<EdgeId>> splice_rotations(const Graph& g,
                                                  const std::vector<std::vector<EdgeId>>& base,
                                                  const std::vector<std::vector<EdgeId>>& insert_after);

// Counter-clockwise boundary (u, v1, w1, w2, v2) or its reverse, whichever
// runs counter-clockwise in the embedding.
std::array<Vertex, 5> facial_pentagon(const PlanarEmbedding& emb, const Triplet& t);

RotationScheme build_rotation_scheme(const Graph& g, const PlanarEmbedding& emb,
                                     const TripletIndex& index);

std::string serialize(const RotationScheme& s);
RotationScheme deserialize(const std::string& text);

} // namespace pentarec

#endif
