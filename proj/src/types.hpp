#pragma once

#include "rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace credal {

/// Bounded payoff vector, one exact value per state (or per partition cell).
/// The negation of a loss row.
class Gamble {
public:
    explicit Gamble(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

    Rational min_value() const;
    Rational max_value() const;
    /// max - min; zero exactly for constant gambles.
    Rational range() const;

private:
    std::vector<Rational> values_;
};

/// Finitely additive probability on a finite space, represented by its atom
/// weights: all weights >= 0 and summing to exactly 1.
class ProbabilityCharge {
public:
    explicit ProbabilityCharge(std::vector<Rational> weights);

    const std::vector<Rational>& weights() const { return weights_; }
    std::size_t dimension() const { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_[i]; }

    /// Probability of a set of states, by summation over its members.
    Rational mass_of(std::span<const std::size_t> states) const;

    friend bool operator==(const ProbabilityCharge&, const ProbabilityCharge&) = default;

private:
    std::vector<Rational> weights_;
};

/// Finite, non-empty collection of probability charges of equal dimension.
/// Duplicates are permitted; dedup() removes them keeping first occurrences.
class CredalSet {
public:
    explicit CredalSet(std::vector<ProbabilityCharge> members);

    const std::vector<ProbabilityCharge>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t dimension() const { return members_.front().dimension(); }
    const ProbabilityCharge& operator[](std::size_t i) const { return members_[i]; }

    CredalSet dedup() const;

private:
    std::vector<ProbabilityCharge> members_;
};

/// Ordered grouping of ground states 0..m-1 into disjoint, exhaustive,
/// non-empty cells.
class Partition {
public:
    explicit Partition(std::vector<std::vector<std::size_t>> cells);

    static Partition singletons(std::size_t ground_size);

    const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
    std::size_t cell_count() const { return cells_.size(); }
    std::size_t ground_size() const { return ground_size_; }

    /// Cell-marginal vector (P(A_1),...,P(A_n)) of a ground charge.
    ProbabilityCharge project(const ProbabilityCharge& ground) const;

private:
    std::vector<std::vector<std::size_t>> cells_;
    std::size_t ground_size_ = 0;
};

/// A finite decision problem: states, decisions, a loss matrix with one row
/// per decision, and a credal set over the states. The gamble of decision d
/// is the negated loss row.
class DecisionProblem {
public:
    DecisionProblem(std::vector<std::string> state_labels,
                    std::vector<std::string> decision_labels,
                    std::vector<std::vector<Rational>> loss,
                    CredalSet credal);

    const std::vector<std::string>& state_labels() const { return state_labels_; }
    const std::vector<std::string>& decision_labels() const { return decision_labels_; }
    const std::vector<std::vector<Rational>>& loss() const { return loss_; }
    const CredalSet& credal() const { return credal_; }

    std::size_t state_count() const { return state_labels_.size(); }
    std::size_t decision_count() const { return decision_labels_.size(); }

    Gamble gamble_for(std::size_t decision) const;

    /// Replaces the credal set, keeping states/decisions/loss.
    DecisionProblem with_credal(CredalSet credal) const;

private:
    std::vector<std::string> state_labels_;
    std::vector<std::string> decision_labels_;
    std::vector<std::vector<Rational>> loss_;
    CredalSet credal_;
};

/// Exact expectation of a gamble under a charge (dot product).
Rational expectation(const Gamble& f, const ProbabilityCharge& p);

/// The problem's range scale: the largest gamble range over all decisions.
/// Relative choice tolerances are expressed as multiples of this quantity.
Rational range_scale(const DecisionProblem& problem);

} // namespace credal
