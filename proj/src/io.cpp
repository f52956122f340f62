#include "pentarec/io.hpp"

#include <fstream>
#include <sstream>

namespace pentarec {

std::optional<GraphFormat> parse_graph_format(const std::string& s) {
    if (s == "edgelist") return GraphFormat::EdgeList;
    if (s == "graph6") return GraphFormat::Graph6;
    return std::nullopt;
}

namespace {

Graph checked_build(int n, const std::vector<std::pair<int, int>>& pairs) {
    try {
        return build_graph(n, pairs);
    } catch (const GraphError& ex) {
        throw ParseError(ex.what());
    }
}

} // namespace

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    long n = 0, m = 0;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long a = 0, b = 0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest)) throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        if (!header) {
            if (a < 0 || b < 0) throw ParseError("line " + std::to_string(lineno) + ": negative header value");
            n = a;
            m = b;
            header = true;
            pairs.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (!header) throw ParseError("missing header");
    if (static_cast<long>(pairs.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
    return checked_build(static_cast<int>(n), pairs);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    for (auto [a, b] : g.edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

Graph read_graph6(const std::string& raw) {
    std::string text = raw;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    if (text.find('\n') != std::string::npos) throw ParseError("graph6: expected a single graph");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw ParseError("graph6: truncated");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range at " + std::to_string(pos - 1));
        return c - 63;
    };
    long n = next();
    if (n == 63) {
        n = next();
        if (n == 63) {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        } else {
            n = (n << 12) | (next() << 6);
            n |= next();
        }
    }
    std::vector<std::pair<int, int>> pairs;
    int bits_left = 0, word = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            if (bits_left == 0) {
                word = next();
                bits_left = 6;
            }
            --bits_left;
            if ((word >> bits_left) & 1) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    if (pos != text.size()) throw ParseError("graph6: trailing bytes");
    return checked_build(static_cast<int>(n), pairs);
}

std::string write_graph6(const Graph& g) {
    std::string out;
    const long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    EdgeMap em(g);
    int word = 0, filled = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            word = (word << 1) | (em.has(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    out.push_back('\n');
    return out;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? read_graph6(text) : read_edge_list(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

} // namespace pentarec
