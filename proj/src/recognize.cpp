#include "pentarec/recognize.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "pentarec/embed.hpp"
#include "pentarec/verify.hpp"

namespace pentarec {

namespace {

RecognizeResult run(const Graph& g, const RecognizeOptions& opt) {
    RecognizeResult r;
    r.stats.n = g.n;
    r.stats.m = g.m();
    auto fail = [&](Rejection rej) {
        r.reject = std::move(rej);
        return r;
    };

    DegeneracyOrder d = degeneracy_order(g);
    PreflightReport pre = preflight(g, d);
    if (!pre.pass() && !opt.diagnostic) return fail(pre.rejection());

    EdgeClassification cls = classify_edges(count_common_neighbors(g, d));
    r.stats.potentially_planar = cls.count(EdgeClass::PotentiallyPlanar);
    r.stats.clearly_crossing = cls.count(EdgeClass::ClearlyCrossing);
    if (!pre.pass()) return fail(pre.rejection());

    r.crossbat = find_crossbat_instances(g, d, cls);
    r.stats.crossbat_instances = static_cast<int>(r.crossbat.size());
    for (const auto& inst : r.crossbat) r.crossbat_status.push_back(fix_crossbat(inst, d, cls));

    EmbedOutcome eo = check_planar_3connected(g, build_gp(g, cls));
    if (eo.reject) {
        r.reclassifications = cls.log;
        return fail(*eo.reject);
    }
    PlanarEmbedding emb = std::move(*eo.embedding);
    if (auto rej = face_audit(g, d, emb)) {
        r.reclassifications = cls.log;
        return fail(*rej);
    }
    r.stats.triangulation_chords = triangulate(g, d, emb, cls);
    r.reclassifications = cls.log;
    r.stats.faces = emb.face_count();
    DualGraph dg = dual(g, emb);

    TripletIndex index = enumerate_triplets(g, d, emb, dg, cls);
    r.stats.triplets = index.size();
    if (auto rej = forced_fast_path(g, cls, index)) return fail(*rej);
    label_all(index, g, d, opt.battery);
    for (int t = 0; t < index.size(); ++t) {
        if (index.label[t] == TripletLabel::FacialForced) ++r.stats.forced;
        if (index.selected(t)) ++r.stats.facial;
    }
    if (auto rej = check_cover(g, emb, index, cls)) return fail(*rej);

    RotationScheme scheme = build_rotation_scheme(g, emb, index);
    if (opt.verify_certificate) {
        Verdict v = verify_optimal(g, scheme);
        if (!v) return fail(Rejection{"verify", v.reason, v.detail});
    }
    for (int t = 0; t < index.size(); ++t) {
        if (!index.selected(t)) continue;
        auto p = facial_pentagon(emb, index.triplets[t]);
        std::rotate(p.begin(), std::min_element(p.begin(), p.end()), p.end());
        r.facial.push_back(p);
    }
    std::sort(r.facial.begin(), r.facial.end());
    r.scheme = std::move(scheme);
    r.accepted = true;
    return r;
}

} // namespace

RecognizeResult recognize(const Graph& g, const RecognizeOptions& options) {
    auto start = std::chrono::steady_clock::now();
    RecognizeResult r = run(g, options);
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string format_stats(const RecognizeStats& s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", s.seconds);
    return "n=" + std::to_string(s.n) + "\nm=" + std::to_string(s.m) +
           "\npotentially_planar=" + std::to_string(s.potentially_planar) +
           "\nclearly_crossing=" + std::to_string(s.clearly_crossing) +
           "\ncrossbat=" + std::to_string(s.crossbat_instances) +
           "\ntriangulation_chords=" + std::to_string(s.triangulation_chords) +
           "\nfaces=" + std::to_string(s.faces) + "\ntriplets=" + std::to_string(s.triplets) +
           "\nforced=" + std::to_string(s.forced) + "\nfacial=" + std::to_string(s.facial) +
           "\nseconds=" + buf + "\n";
}

} // namespace pentarec
