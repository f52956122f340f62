#ifndef PENTAREC_ORACLE_HPP
#define PENTAREC_ORACLE_HPP

#include <array>
#include <vector>

#include "pentarec/graph.hpp"

namespace pentarec {

inline constexpr int kOracleMaxVertices = 40;

struct OracleResult {
    enum class Status { Accept, Reject, TooLarge };
    Status status = Status::Reject;
    // boundary cycles of the facial 5-cliques found, each starting at its
    // smallest vertex, sorted
    std::vector<std::array<Vertex, 5>> faces;
    long nodes = 0; // search nodes visited

    bool accepted() const { return status == Status::Accept; }
};

// Brute-force recognition for small graphs: searches for a set of 5-cliques,
// each with a chosen boundary 5-cycle, such that every edge is the chord of
// exactly one of them or a boundary edge of exactly two, and the boundary
// cycles are the faces of a 3-connected spanning plane graph.
OracleResult oracle_recognize(const Graph& g);

} // namespace pentarec

#endif
