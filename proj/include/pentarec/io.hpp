#ifndef PENTAREC_IO_HPP
#define PENTAREC_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "pentarec/graph.hpp"

namespace pentarec {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { EdgeList, Graph6 };
std::optional<GraphFormat> parse_graph_format(const std::string& s);

// "n m" header, then m lines "u v" (0-based); lines starting with '#' are comments.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

Graph read_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

Graph parse_graph(const std::string& text, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pentarec

#endif
