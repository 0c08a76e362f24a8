#pragma once

#include "types.hpp"

namespace credal {

// The closeness relations between objects on a ground space and their
// counterparts on a partition of it. All tests are exact; no floating point.

/// True iff the largest in-cell deviation between f and its cell value is at
/// most range(f)*eps. A zero-range f therefore requires exact equality.
bool gamble_close(const Gamble& ground, const Gamble& coarse, const Partition& partition,
                  const Rational& eps);

/// True iff the L1 distance between the cell marginals of ground and coarse
/// is at most eps.
bool charge_close(const ProbabilityCharge& ground, const ProbabilityCharge& coarse,
                  const Partition& partition, const Rational& eps);

/// True iff every ground member has a coarse member within delta (in the
/// charge_close sense) and vice versa.
bool credal_close(const CredalSet& ground, const CredalSet& coarse, const Partition& partition,
                  const Rational& delta);

/// True iff every decision's gamble row is gamble_close between the two
/// problems. Requires identical decision labels.
bool loss_close(const DecisionProblem& ground, const DecisionProblem& coarse,
                const Partition& partition, const Rational& eps);

} // namespace credal
