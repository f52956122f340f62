#ifndef PENTAREC_RECOGNIZE_HPP
#define PENTAREC_RECOGNIZE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentarec/assemble.hpp"
#include "pentarec/classify.hpp"
#include "pentarec/crossbat.hpp"
#include "pentarec/graph.hpp"
#include "pentarec/reject.hpp"
#include "pentarec/triplets.hpp"

namespace pentarec {

struct RecognizeOptions {
    // Re-check the emitted certificate and reject (stage "verify") if it fails.
    bool verify_certificate = true;
    // Keep classifying after a preflight rejection to fill in the statistics.
    bool diagnostic = false;
    BatteryConfig battery;
};

struct RecognizeStats {
    int n = 0;
    int m = 0;
    int potentially_planar = 0; // before any reclassification
    int clearly_crossing = 0;
    int crossbat_instances = 0;
    int triangulation_chords = 0;
    int faces = 0;
    int triplets = 0;
    int forced = 0;
    int facial = 0;
    double seconds = 0.0;
};

struct RecognizeResult {
    bool accepted = false;
    std::optional<Rejection> reject;
    std::optional<RotationScheme> scheme;
    // counter-clockwise boundary of every facial 5-clique, starting at its
    // smallest vertex, sorted
    std::vector<std::array<Vertex, 5>> facial;
    std::vector<CrossBatInstance> crossbat;
    std::vector<FixStatus> crossbat_status;
    std::vector<Reclassification> reclassifications;
    RecognizeStats stats;
};

RecognizeResult recognize(const Graph& g, const RecognizeOptions& options = {});

// Multi-line "key=value" rendering of the statistics.
std::string format_stats(const RecognizeStats& s);

} // namespace pentarec

#endif
