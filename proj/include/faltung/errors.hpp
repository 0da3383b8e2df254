#pragma once

#include <stdexcept>
#include <string>

namespace faltung {

// Violated precondition (bad argument, out-of-range parameter).
// CLI maps this to exit code 2.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact computation produced something structurally impossible
// (non-integer where integrality is guaranteed, failed divisibility).
// Signals a transcription bug, not bad input.  CLI maps this to exit code 3.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace faltung
