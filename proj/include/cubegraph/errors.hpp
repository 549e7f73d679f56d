#pragma once

#include <stdexcept>

namespace cubegraph {

// Parameter combinations a construction or search cannot satisfy
// (pigeonhole violations, thresholds, empty designs).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configured caps hit: enumeration blowups, search dimension limits,
// node budgets.  Searches may leave a resumable checkpoint behind.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plain argument validation errors use std::invalid_argument.

}  // namespace cubegraph
