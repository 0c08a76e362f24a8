#pragma once

#include "discretize.hpp"
#include "types.hpp"

#include <stdexcept>
#include <string>

namespace credal {

/// Raised on malformed problem files. For JSON syntax errors the message
/// carries the 1-based line and column of the offending byte.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a problem from a JSON document with fields
///   states:    ["w1", ...]
///   decisions: ["d1", ...]
///   loss:      [["0", "1/2"], ...]   one row per decision
///   credal:    [["1/3", "2/3"], ...] one probability vector per member
/// Numeric entries are strings parsed exactly ("3/10", "0.3") or JSON
/// integers; non-integer JSON numbers are rejected to keep values exact.
DecisionProblem problem_from_json(const std::string& text);

/// Canonical serialization: two-space indent, entries as exact fraction
/// strings. Reading the output back yields an identical problem.
std::string problem_to_json(const DecisionProblem& problem);

/// Sidecar description of a discretization run: sizes, grid denominator,
/// bounds, cell membership by source state label, and the re-checked
/// closeness certificates.
std::string discretization_report_json(const DiscretizationReport& report,
                                       const std::vector<std::string>& source_state_labels);

} // namespace credal
