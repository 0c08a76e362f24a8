#pragma once

#include "bounds.hpp"
#include "types.hpp"

#include <cstdint>

namespace credal {

struct PartitionResult {
    Partition partition;
    /// Problem over the cells: loss rows are per-cell infima of the negated
    /// loss (negated back), credal members are the exact cell marginals of
    /// the original members. Cell states are labelled "A1", "A2", ...
    DecisionProblem coarse;
};

/// Coarsens the problem so that loss_close holds at eps and the number of
/// cells is at most (1+1/eps)^(number of decisions). Each decision's gamble
/// is binned into half-open intervals of width range*eps starting at its
/// minimum; the returned partition is the common refinement, cells ordered
/// by smallest member index.
PartitionResult build_partition(const DecisionProblem& problem, const Rational& eps);

/// Smallest grid denominator N >= cell_count / delta.
std::uint64_t grid_denominator(std::size_t cell_count, const Rational& delta);

/// Projects every member to its cell marginals, rounds onto the simplex grid
/// with denominator grid_denominator(cells, delta), and deduplicates. The
/// result is credal_close to the input at delta, with size at most
/// C(N + n - 1, n - 1).
CredalSet approximate_credal(const CredalSet& ground, const Partition& partition,
                             const Rational& delta);

/// Everything produced by one run of the pipeline, with the certified
/// relations re-checked and the two cardinality bounds evaluated.
struct DiscretizationReport {
    Partition partition;
    DecisionProblem approx_problem;
    Rational eps;
    Rational delta;
    std::uint64_t grid_denominator = 1;
    Rational partition_bound; ///< (1+1/eps)^decisions, exact
    Int credal_bound;         ///< C(N+n-1, n-1), exact
    bool loss_close_ok = false;
    bool credal_close_ok = false;
};

DiscretizationReport discretize(const DecisionProblem& problem, const Rational& eps,
                                const Rational& delta);

} // namespace credal
