#include "discretize.hpp"

#include "relations.hpp"
#include "simplex_grid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace credal {

namespace {

std::vector<std::string> cell_labels(std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back("A" + std::to_string(i + 1));
    return labels;
}

} // namespace

PartitionResult build_partition(const DecisionProblem& problem, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be > 0");
    const std::size_t states = problem.state_count();
    const std::size_t decisions = problem.decision_count();

    // Bin index of each state under each decision's gamble. Constant rows
    // get a single bin. For the rest, state w lands in bin
    // floor((f(w) - min f) / (range * eps)), which stays below
    // floor(1/eps) + 1 even at the maximum.
    std::vector<std::vector<std::size_t>> bin(states, std::vector<std::size_t>(decisions, 0));
    for (std::size_t d = 0; d < decisions; ++d) {
        Gamble f = problem.gamble_for(d);
        Rational lo = f.min_value();
        Rational width = f.range() * eps;
        if (width == 0) continue;
        for (std::size_t w = 0; w < states; ++w)
            bin[w][d] = rational_floor((f[w] - lo) / width).convert_to<std::size_t>();
    }

    // Common refinement: states sharing every bin index share a cell. Cells
    // appear in order of their smallest state index.
    std::map<std::vector<std::size_t>, std::size_t> cell_of;
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t w = 0; w < states; ++w) {
        auto [it, inserted] = cell_of.try_emplace(bin[w], cells.size());
        if (inserted) cells.emplace_back();
        cells[it->second].push_back(w);
    }
    Partition partition(std::move(cells));

    std::vector<std::vector<Rational>> coarse_loss(decisions);
    for (std::size_t d = 0; d < decisions; ++d) {
        Gamble f = problem.gamble_for(d);
        coarse_loss[d].reserve(partition.cell_count());
        for (const auto& cell : partition.cells()) {
            Rational inf = f[cell.front()];
            for (std::size_t w : cell) inf = std::min(inf, f[w]);
            coarse_loss[d].push_back(-inf);
        }
    }

    std::vector<ProbabilityCharge> marginals;
    marginals.reserve(problem.credal().size());
    for (const auto& p : problem.credal().members()) marginals.push_back(partition.project(p));

    DecisionProblem coarse(cell_labels(partition.cell_count()), problem.decision_labels(),
                           std::move(coarse_loss), CredalSet(std::move(marginals)));
    return PartitionResult{std::move(partition), std::move(coarse)};
}

std::uint64_t grid_denominator(std::size_t cell_count, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("delta must be > 0");
    Int n = rational_ceil(Rational(Int(cell_count)) / delta);
    if (n < 1) n = 1;
    return n.convert_to<std::uint64_t>();
}

CredalSet approximate_credal(const CredalSet& ground, const Partition& partition,
                             const Rational& delta) {
    const std::uint64_t N = grid_denominator(partition.cell_count(), delta);
    std::vector<ProbabilityCharge> rounded;
    rounded.reserve(ground.size());
    for (const auto& p : ground.members())
        rounded.push_back(round_to_grid(partition.project(p), N).to_charge());
    return CredalSet(std::move(rounded)).dedup();
}

DiscretizationReport discretize(const DecisionProblem& problem, const Rational& eps,
                                const Rational& delta) {
    PartitionResult built = build_partition(problem, eps);
    CredalSet coarse_credal = approximate_credal(problem.credal(), built.partition, delta);
    DecisionProblem approx = built.coarse.with_credal(coarse_credal);

    const std::size_t n = built.partition.cell_count();
    const std::uint64_t N = grid_denominator(n, delta);

    Rational per_decision = 1 + 1 / eps;
    Rational partition_bound = 1;
    for (std::size_t d = 0; d < problem.decision_count(); ++d) partition_bound *= per_decision;

    DiscretizationReport report{
        built.partition,
        approx,
        eps,
        delta,
        N,
        partition_bound,
        integer_binomial(Int(N) + Int(n) - 1, Int(n) - 1),
        loss_close(problem, approx, built.partition, eps),
        credal_close(problem.credal(), coarse_credal, built.partition, delta),
    };
    return report;
}

} // namespace credal
