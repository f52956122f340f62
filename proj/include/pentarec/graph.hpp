#ifndef PENTAREC_GRAPH_HPP
#define PENTAREC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pentarec {

using Vertex = int;
using EdgeId = int;
inline constexpr EdgeId kNoEdge = -1;

class GraphError : public std::runtime_error {
public:
    enum class Kind { SelfLoop, ParallelEdge, VertexOutOfRange };
    GraphError(Kind kind, int u, int v);
    Kind kind;
    int u, v;
};

// Malformed input document; the message names the line or field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph. Edge ids follow input order; endpoints are stored
// with first < second.
struct Graph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<EdgeId>> inc;

    int m() const { return static_cast<int>(edges.size()); }
    int degree(Vertex v) const { return static_cast<int>(inc[v].size()); }
    Vertex other(EdgeId e, Vertex v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs);

struct DegeneracyOrder {
    std::vector<Vertex> order;   // v_1..v_n; each vertex has few earlier neighbors
    std::vector<int> pos;        // pos[order[i]] == i
    int degeneracy = 0;
    std::vector<int> back_start; // CSR offsets by vertex id
    std::vector<Vertex> back_nbr;
    std::vector<EdgeId> back_edge;

    std::span<const Vertex> back(Vertex v) const {
        return {back_nbr.data() + back_start[v], back_nbr.data() + back_start[v + 1]};
    }
    std::span<const EdgeId> back_edges(Vertex v) const {
        return {back_edge.data() + back_start[v], back_edge.data() + back_start[v + 1]};
    }
};

DegeneracyOrder degeneracy_order(const Graph& g);
bool adjacent(const DegeneracyOrder& d, Vertex u, Vertex v);
EdgeId edge_between(const DegeneracyOrder& d, Vertex u, Vertex v);

// Hash lookup for contexts without a degeneracy bound.
class EdgeMap {
public:
    EdgeMap() = default;
    explicit EdgeMap(const Graph& g);
    EdgeId find(Vertex u, Vertex v) const;
    bool has(Vertex u, Vertex v) const { return find(u, v) != kNoEdge; }

private:
    static std::uint64_t key(Vertex u, Vertex v);
    std::unordered_map<std::uint64_t, EdgeId> map_;
};

} // namespace pentarec

#endif
