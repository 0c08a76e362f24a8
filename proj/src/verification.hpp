#pragma once

#include "bounds.hpp"
#include "types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace credal {

struct VerifyOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    unsigned max_states = 8;
    unsigned max_decisions = 4;
    /// Test hook: substituted for inflate_levels inside the containment
    /// properties, so a corrupted inflation is caught as a counterexample.
    std::function<InflatedLevels(const Rational&, const Rational&, const Rational&)>
        inflate_override;
};

struct PropertyResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;
    double elapsed_seconds = 0;
    /// JSON document describing the first violation, for replay.
    std::optional<std::string> counterexample;
};

struct VerifyReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    const PropertyResult* find(const std::string& name) const;
};

/// Runs the randomized exact property suite: discretization certificates,
/// expectation error bounds, choice-set containments between a problem and
/// its discretization, and the choice-function algebra. Problems are drawn
/// from a small rational lattice (denominators <= 12, losses in [0,1]) so
/// every check is decidable exactly.
VerifyReport run_verification(const VerifyOptions& options);

/// Deterministic JSON rendering (timings excluded): byte-identical across
/// runs for a fixed (options, seed).
std::string verify_report_json(const VerifyReport& report);

/// Deterministic lattice problem generator used by the suite; exposed for
/// tests. Dimensions are drawn up to the given maxima.
DecisionProblem random_lattice_problem(std::uint64_t seed, unsigned max_states,
                                       unsigned max_decisions);

/// The stored counterexample showing optimality is sensitive to taking
/// convex hulls: adding the midpoint charge enlarges the optimal set, while
/// the maximal set is unchanged.
DecisionProblem hull_sensitivity_witness();
DecisionProblem hull_sensitivity_witness_extended();

} // namespace credal
