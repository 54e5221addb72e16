#pragma once

#include <stdexcept>
#include <string>

namespace paretoagg {

// Malformed problem data (dimension mismatch, non-finite entries, bad file).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric breakdown inside an optimization routine. Distinct from a verdict:
// callers must treat this as "no answer", never as a result.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace paretoagg
