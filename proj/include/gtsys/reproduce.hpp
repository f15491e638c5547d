#pragma once

// Golden-value checks against the published examples, shared by the
// `verify-paper` subcommand and the test suite.

#include <string>
#include <vector>

namespace gtsys {

struct CheckOutcome {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;  ///< mismatch description, or a note on a passing check
};

/// Runs every golden check; results come back in a fixed order.
std::vector<CheckOutcome> reproduction_checks();

}  // namespace gtsys
