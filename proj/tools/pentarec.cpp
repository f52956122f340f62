#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

#include "pentarec/generate.hpp"
#include "pentarec/io.hpp"
#include "pentarec/recognize.hpp"
#include "pentarec/render.hpp"
#include "pentarec/verify.hpp"

using namespace pentarec;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

std::uint64_t default_seed() {
    if (const char* s = std::getenv("PENTAREC_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

GraphFormat format_or_throw(const std::string& name) {
    auto f = parse_graph_format(name);
    if (!f) throw ParseError("unknown format '" + name + "'");
    return *f;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") std::cout << content;
    else write_file(path, content);
}

struct RecognizeArgs {
    std::vector<std::string> files;
    std::string format = "edgelist";
    std::string emit_rotation;
    bool stats = false;
    bool diagnostic = false;
    bool batch = false;
    int jobs = 1;
};

int recognize_one(const RecognizeArgs& a) {
    Graph g = parse_graph(read_file(a.files[0]), format_or_throw(a.format));
    RecognizeOptions opt;
    opt.diagnostic = a.diagnostic;
    RecognizeResult r = recognize(g, opt);
    if (a.stats) std::cout << format_stats(r.stats);
    if (!r.accepted) {
        std::cout << r.reject->line() << "\n";
        return kReject;
    }
    std::cout << "accept facial=" << r.facial.size() << "\n";
    if (!a.emit_rotation.empty()) emit(a.emit_rotation, serialize(*r.scheme));
    return kAccept;
}

int recognize_batch(const RecognizeArgs& a) {
    const GraphFormat fmt = format_or_throw(a.format);
    std::vector<std::string> lines(a.files.size());
    std::vector<int> codes(a.files.size(), kError);
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= a.files.size()) return;
                i = next++;
            }
            try {
                RecognizeResult r = recognize(parse_graph(read_file(a.files[i]), fmt));
                lines[i] = a.files[i] + ": " + (r.accepted ? "accept" : r.reject->line());
                codes[i] = r.accepted ? kAccept : kReject;
            } catch (const std::exception& ex) {
                lines[i] = a.files[i] + ": error " + ex.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, a.jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int code = kAccept;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::cout << lines[i] << "\n";
        code = std::max(code, codes[i]);
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognizer for optimal 2-planar graphs"};
    app.require_subcommand(1);

    RecognizeArgs rec;
    auto* cmd_rec = app.add_subcommand("recognize", "decide whether a graph is optimal 2-planar");
    cmd_rec->add_option("files", rec.files, "graph file(s)")->required();
    cmd_rec->add_option("--format", rec.format, "edgelist or graph6");
    cmd_rec->add_option("--emit-rotation", rec.emit_rotation, "write the certificate on accept");
    cmd_rec->add_flag("--stats", rec.stats, "print counters and wall time");
    cmd_rec->add_flag("--diagnostic", rec.diagnostic, "classify edges even after a preflight reject");
    cmd_rec->add_flag("--batch", rec.batch, "one result line per file");
    cmd_rec->add_option("--jobs", rec.jobs, "worker threads in batch mode");

    std::string graph_path, scheme_path, format = "edgelist";
    auto* cmd_verify = app.add_subcommand("verify", "check a rotation-scheme certificate");
    cmd_verify->add_option("graph", graph_path)->required();
    cmd_verify->add_option("scheme", scheme_path)->required();
    cmd_verify->add_option("--format", format, "edgelist or graph6");

    std::string out_path, scheme_out, input_path, kind_name;
    int k = 2;
    std::uint64_t seed = default_seed();
    auto* cmd_gen = app.add_subcommand("generate", "write a positive or mutated instance");
    cmd_gen->require_subcommand(1);
    auto add_out = [&](CLI::App* c) {
        c->add_option("-o,--output", out_path, "output file (default stdout)");
        c->add_option("--scheme", scheme_out, "also write the reference certificate");
    };
    auto* gen_dodeca = cmd_gen->add_subcommand("dodeca", "saturated dodecahedron");
    add_out(gen_dodeca);
    auto* gen_glue = cmd_gen->add_subcommand("glue", "saturated chain of glued dodecahedra");
    gen_glue->add_option("--k", k, "number of dodecahedra");
    gen_glue->add_option("--seed", seed, "seed (default $PENTAREC_SEED or 1)");
    add_out(gen_glue);
    auto* gen_crossbat = cmd_gen->add_subcommand("crossbat", "saturated host containing a CROSS-BAT");
    add_out(gen_crossbat);
    auto* gen_mutate = cmd_gen->add_subcommand("mutate", "seeded mutation of an edge list");
    gen_mutate->add_option("--kind", kind_name, "edge-swap, degree-breaker, chord-retarget, crossing-overload, seam-scramble")
        ->required();
    gen_mutate->add_option("--seed", seed, "seed (default $PENTAREC_SEED or 1)");
    gen_mutate->add_option("--input", input_path, "input edge list")->required();
    gen_mutate->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string svg_path;
    auto* cmd_render = app.add_subcommand("render", "draw a certificate as SVG");
    cmd_render->add_option("graph", graph_path)->required();
    cmd_render->add_option("scheme", scheme_path)->required();
    cmd_render->add_option("--svg", svg_path, "output SVG")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (cmd_rec->parsed()) {
            if (rec.batch || rec.files.size() > 1) return recognize_batch(rec);
            return recognize_one(rec);
        }
        if (cmd_verify->parsed()) {
            Graph g = parse_graph(read_file(graph_path), format_or_throw(format));
            RotationScheme s = deserialize(read_file(scheme_path));
            Verdict v = verify_optimal(g, s);
            if (v) {
                std::cout << "valid\n";
                return kAccept;
            }
            std::cout << "invalid " << v.reason << (v.detail.empty() ? "" : " " + v.detail) << "\n";
            return kReject;
        }
        if (cmd_gen->parsed()) {
            if (gen_mutate->parsed()) {
                auto kind = parse_mutation_kind(kind_name);
                if (!kind) throw ParseError("unknown mutation kind '" + kind_name + "'");
                Graph g = read_edge_list(read_file(input_path));
                emit(out_path, write_edge_list(mutate(g, *kind, seed)));
                return kAccept;
            }
            Pentangulation p = gen_dodeca->parsed() ? dodecahedron()
                               : gen_glue->parsed() ? random_pentangulation(k, seed)
                                                    : crossbat_host();
            Saturated sat = saturate(p);
            emit(out_path, write_edge_list(sat.graph));
            if (!scheme_out.empty()) write_file(scheme_out, serialize(sat.scheme));
            return kAccept;
        }
        if (cmd_render->parsed()) {
            Graph g = read_edge_list(read_file(graph_path));
            RotationScheme s = deserialize(read_file(scheme_path));
            try {
                write_file(svg_path, render_svg(g, s));
            } catch (const InvalidScheme& ex) {
                std::cout << "invalid " << ex.what() << "\n";
                return kReject;
            }
            return kAccept;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kError;
    }
    return kError;
}
