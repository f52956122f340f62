#ifndef PENTAREC_RENDER_HPP
#define PENTAREC_RENDER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pentarec/assemble.hpp"
#include "pentarec/verify.hpp"

namespace pentarec {

struct InvalidScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Barycentric positions for every planarization node, with the longest face
// pinned to a regular polygon on the unit circle.
std::vector<std::pair<double, double>> tutte_layout(const Planarization& p);

// Throws InvalidScheme (message = verifier reason) if the scheme is not valid.
std::string render_svg(const Graph& g, const RotationScheme& s);

} // namespace pentarec

#endif
