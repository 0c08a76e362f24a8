#pragma once

#include "types.hpp"

namespace credal {

enum class ChoiceKind { optimality, maximality };

/// Result of evaluating a choice function at a tolerance level.
struct ChoiceSet {
    std::vector<std::size_t> chosen_indices; ///< in decision order
    std::vector<std::string> chosen_labels;
    Rational level;
    ChoiceKind kind = ChoiceKind::optimality;

    bool contains(std::size_t decision) const;
    /// True iff every chosen decision here is chosen in other.
    bool subset_of(const ChoiceSet& other) const;
};

/// Decisions whose expected-utility shortfall against the best alternative
/// is at most gamma * range_scale under at least one credal member
/// (exists-P-forall-e). gamma = 0 is exact optimality.
ChoiceSet epsilon_optimal(const DecisionProblem& problem, const Rational& gamma);

/// Decisions that no alternative beats by more than gamma * range_scale
/// under every credal member (forall-e-exists-P). gamma = 0 is maximality,
/// i.e. pairwise undominatedness.
ChoiceSet epsilon_maximal(const DecisionProblem& problem, const Rational& gamma);

/// Exact membership of p in the convex hull of the members of hull_points,
/// decided by rational phase-1 simplex with Bland's rule.
bool in_convex_hull(const ProbabilityCharge& p, const CredalSet& hull_points);

/// The members that are extreme points of the convex hull of the set: after
/// deduplication, a member is kept iff it does not lie in the convex hull of
/// the remaining members.
CredalSet extreme_points(const CredalSet& set);

} // namespace credal
