#ifndef PENTAREC_REJECT_HPP
#define PENTAREC_REJECT_HPP

#include <string>

namespace pentarec {

// A rejection is a value: stage code, reason code, optional witness token.
struct Rejection {
    std::string stage;
    std::string reason;
    std::string witness;

    std::string line() const {
        std::string s = "reject " + stage + " " + reason;
        if (!witness.empty()) s += " " + witness;
        return s;
    }
};

} // namespace pentarec

#endif
