#include "pentarec/render.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pentarec {

std::vector<std::pair<double, double>> tutte_layout(const Planarization& p) {
    std::vector<std::pair<double, double>> pos(p.n, {0.0, 0.0});
    if (p.faces.empty()) return pos;
    auto outer_it = std::max_element(p.faces.begin(), p.faces.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<int> outer;
    std::vector<char> pinned(p.n, 0);
    for (int v : *outer_it)
        if (!pinned[v]) {
            pinned[v] = 1;
            outer.push_back(v);
        }
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        double t = 2 * pi * static_cast<double>(i) / static_cast<double>(outer.size());
        pos[outer[i]] = {std::cos(t), -std::sin(t)};
    }

    std::vector<int> index(p.n, -1);
    int free_count = 0;
    for (int v = 0; v < p.n; ++v)
        if (!pinned[v]) index[v] = free_count++;
    if (free_count == 0) return pos;

    std::vector<std::vector<int>> adj(p.n);
    for (auto [a, b] : p.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<Eigen::Triplet<double>> entries;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(free_count), by = Eigen::VectorXd::Zero(free_count);
    for (int v = 0; v < p.n; ++v) {
        if (pinned[v]) continue;
        int i = index[v];
        entries.emplace_back(i, i, static_cast<double>(adj[v].size()));
        for (int w : adj[v]) {
            if (pinned[w]) {
                bx[i] += pos[w].first;
                by[i] += pos[w].second;
            } else {
                entries.emplace_back(i, index[w], -1.0);
            }
        }
    }
    Eigen::SparseMatrix<double> lap(free_count, free_count);
    lap.setFromTriplets(entries.begin(), entries.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
    for (int v = 0; v < p.n; ++v)
        if (!pinned[v]) pos[v] = {x[index[v]], y[index[v]]};
    return pos;
}

std::string render_svg(const Graph& g, const RotationScheme& s) {
    Verdict verdict = verify_scheme(g, s);
    if (!verdict) throw InvalidScheme(verdict.reason);
    const Planarization& p = verdict.planarization;
    auto pos = tutte_layout(p);

    const double size = 800.0, margin = 20.0;
    auto sx = [&](double x) { return margin + (x + 1.0) / 2.0 * (size - 2 * margin); };
    auto sy = [&](double y) { return margin + (y + 1.0) / 2.0 * (size - 2 * margin); };
    char buf[256];
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\">\n",
                  size, size);
    out += buf;
    out += "<style>line.planar{stroke:#222;stroke-width:1.2}line.crossing{stroke:#c33;stroke-width:0.8}"
           "circle.vertex{fill:#fff;stroke:#000}circle.crossing{fill:#c33}</style>\n";
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        auto [a, b] = p.edges[i];
        const char* cls = s.crossings[p.origin[i]].empty() ? "planar" : "crossing";
        std::snprintf(buf, sizeof buf, "<line class=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", cls,
                      sx(pos[a].first), sy(pos[a].second), sx(pos[b].first), sy(pos[b].second));
        out += buf;
    }
    for (int v = 0; v < p.n; ++v) {
        bool real = v < p.real;
        std::snprintf(buf, sizeof buf, "<circle class=\"%s\" cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\"/>\n",
                      real ? "vertex" : "crossing", sx(pos[v].first), sy(pos[v].second), real ? 4.0 : 1.5);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

} // namespace pentarec
