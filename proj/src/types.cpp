#include "types.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace credal {

Gamble::Gamble(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("gamble must have at least one value");
}

Rational Gamble::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

Rational Gamble::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

Rational Gamble::range() const {
    return max_value() - min_value();
}

ProbabilityCharge::ProbabilityCharge(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("probability charge must have at least one weight");
    Rational total = 0;
    for (const Rational& w : weights_) {
        if (w < 0) throw std::invalid_argument("probability charge weight is negative");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("probability charge weights must sum to exactly 1");
}

Rational ProbabilityCharge::mass_of(std::span<const std::size_t> states) const {
    Rational total = 0;
    for (std::size_t i : states) {
        if (i >= weights_.size()) throw std::invalid_argument("state index out of range");
        total += weights_[i];
    }
    return total;
}

CredalSet::CredalSet(std::vector<ProbabilityCharge> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("credal set must be non-empty");
    const std::size_t dim = members_.front().dimension();
    for (const auto& m : members_)
        if (m.dimension() != dim)
            throw std::invalid_argument("credal set members must have equal dimension");
}

CredalSet CredalSet::dedup() const {
    std::vector<ProbabilityCharge> kept;
    for (const auto& m : members_)
        if (std::find(kept.begin(), kept.end(), m) == kept.end()) kept.push_back(m);
    return CredalSet(std::move(kept));
}

Partition::Partition(std::vector<std::vector<std::size_t>> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("partition must have at least one cell");
    std::size_t total = 0;
    for (auto& cell : cells_) {
        if (cell.empty()) throw std::invalid_argument("partition cell is empty");
        std::sort(cell.begin(), cell.end());
        total += cell.size();
    }
    std::vector<bool> seen(total, false);
    for (const auto& cell : cells_)
        for (std::size_t i : cell) {
            if (i >= total) throw std::invalid_argument("partition does not cover a contiguous ground space");
            if (seen[i]) throw std::invalid_argument("partition cells overlap");
            seen[i] = true;
        }
    ground_size_ = total;
}

Partition Partition::singletons(std::size_t ground_size) {
    std::vector<std::vector<std::size_t>> cells(ground_size);
    for (std::size_t i = 0; i < ground_size; ++i) cells[i] = {i};
    return Partition(std::move(cells));
}

ProbabilityCharge Partition::project(const ProbabilityCharge& ground) const {
    if (ground.dimension() != ground_size_)
        throw std::invalid_argument("charge dimension does not match partition ground size");
    std::vector<Rational> marginals;
    marginals.reserve(cells_.size());
    for (const auto& cell : cells_) marginals.push_back(ground.mass_of(cell));
    return ProbabilityCharge(std::move(marginals));
}

DecisionProblem::DecisionProblem(std::vector<std::string> state_labels,
                                 std::vector<std::string> decision_labels,
                                 std::vector<std::vector<Rational>> loss,
                                 CredalSet credal)
    : state_labels_(std::move(state_labels)),
      decision_labels_(std::move(decision_labels)),
      loss_(std::move(loss)),
      credal_(std::move(credal)) {
    if (state_labels_.empty()) throw std::invalid_argument("problem needs at least one state");
    if (decision_labels_.empty()) throw std::invalid_argument("problem needs at least one decision");
    if (loss_.size() != decision_labels_.size())
        throw std::invalid_argument("loss matrix must have one row per decision");
    for (const auto& row : loss_)
        if (row.size() != state_labels_.size())
            throw std::invalid_argument("loss matrix must have one column per state");
    if (credal_.dimension() != state_labels_.size())
        throw std::invalid_argument("credal set dimension must equal the number of states");
    std::unordered_set<std::string> unique(state_labels_.begin(), state_labels_.end());
    if (unique.size() != state_labels_.size()) throw std::invalid_argument("duplicate state label");
    unique = {decision_labels_.begin(), decision_labels_.end()};
    if (unique.size() != decision_labels_.size()) throw std::invalid_argument("duplicate decision label");
}

Gamble DecisionProblem::gamble_for(std::size_t decision) const {
    if (decision >= loss_.size()) throw std::invalid_argument("decision index out of range");
    std::vector<Rational> values;
    values.reserve(loss_[decision].size());
    for (const Rational& l : loss_[decision]) values.push_back(-l);
    return Gamble(std::move(values));
}

DecisionProblem DecisionProblem::with_credal(CredalSet credal) const {
    return DecisionProblem(state_labels_, decision_labels_, loss_, std::move(credal));
}

Rational expectation(const Gamble& f, const ProbabilityCharge& p) {
    if (f.size() != p.dimension())
        throw std::invalid_argument("gamble and charge dimensions do not match");
    Rational total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) total += f[i] * p[i];
    return total;
}

Rational range_scale(const DecisionProblem& problem) {
    Rational best = 0;
    for (std::size_t d = 0; d < problem.decision_count(); ++d)
        best = std::max(best, problem.gamble_for(d).range());
    return best;
}

} // namespace credal
