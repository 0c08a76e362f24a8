#include "relations.hpp"

#include <stdexcept>

namespace credal {

namespace {

void require_nonnegative(const Rational& eps) {
    if (eps < 0) throw std::invalid_argument("tolerance must be >= 0");
}

} // namespace

bool gamble_close(const Gamble& ground, const Gamble& coarse, const Partition& partition,
                  const Rational& eps) {
    require_nonnegative(eps);
    if (ground.size() != partition.ground_size())
        throw std::invalid_argument("ground gamble dimension does not match partition");
    if (coarse.size() != partition.cell_count())
        throw std::invalid_argument("coarse gamble dimension does not match cell count");

    const Rational budget = ground.range() * eps;
    for (std::size_t c = 0; c < partition.cell_count(); ++c)
        for (std::size_t w : partition.cells()[c]) {
            Rational deviation = abs(ground[w] - coarse[c]);
            if (deviation > budget) return false;
        }
    return true;
}

bool charge_close(const ProbabilityCharge& ground, const ProbabilityCharge& coarse,
                  const Partition& partition, const Rational& eps) {
    require_nonnegative(eps);
    if (coarse.dimension() != partition.cell_count())
        throw std::invalid_argument("coarse charge dimension does not match cell count");
    ProbabilityCharge marginals = partition.project(ground);
    Rational distance = 0;
    for (std::size_t c = 0; c < partition.cell_count(); ++c)
        distance += abs(marginals[c] - coarse[c]);
    return distance <= eps;
}

bool credal_close(const CredalSet& ground, const CredalSet& coarse, const Partition& partition,
                  const Rational& delta) {
    require_nonnegative(delta);
    for (const auto& p : ground.members()) {
        bool covered = false;
        for (const auto& q : coarse.members())
            if (charge_close(p, q, partition, delta)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    for (const auto& q : coarse.members()) {
        bool covered = false;
        for (const auto& p : ground.members())
            if (charge_close(p, q, partition, delta)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool loss_close(const DecisionProblem& ground, const DecisionProblem& coarse,
                const Partition& partition, const Rational& eps) {
    if (ground.decision_labels() != coarse.decision_labels())
        throw std::invalid_argument("problems have different decision sets");
    for (std::size_t d = 0; d < ground.decision_count(); ++d)
        if (!gamble_close(ground.gamble_for(d), coarse.gamble_for(d), partition, eps)) return false;
    return true;
}

} // namespace credal
