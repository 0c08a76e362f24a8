#include "choice.hpp"

#include <algorithm>
#include <stdexcept>

namespace credal {

bool ChoiceSet::contains(std::size_t decision) const {
    return std::find(chosen_indices.begin(), chosen_indices.end(), decision) !=
           chosen_indices.end();
}

bool ChoiceSet::subset_of(const ChoiceSet& other) const {
    for (std::size_t d : chosen_indices)
        if (!other.contains(d)) return false;
    return true;
}

namespace {

std::vector<std::vector<Rational>> expectation_table(const DecisionProblem& problem) {
    const auto& members = problem.credal().members();
    std::vector<std::vector<Rational>> table(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
        table[m].reserve(problem.decision_count());
        for (std::size_t d = 0; d < problem.decision_count(); ++d)
            table[m].push_back(expectation(problem.gamble_for(d), members[m]));
    }
    return table;
}

ChoiceSet collect(const DecisionProblem& problem, std::vector<std::size_t> indices,
                  Rational level, ChoiceKind kind) {
    ChoiceSet result;
    result.chosen_indices = std::move(indices);
    for (std::size_t d : result.chosen_indices)
        result.chosen_labels.push_back(problem.decision_labels()[d]);
    result.level = std::move(level);
    result.kind = kind;
    return result;
}

} // namespace

ChoiceSet epsilon_optimal(const DecisionProblem& problem, const Rational& gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    const Rational slack = gamma * range_scale(problem);
    const auto table = expectation_table(problem);

    std::vector<Rational> best(table.size());
    for (std::size_t m = 0; m < table.size(); ++m)
        best[m] = *std::max_element(table[m].begin(), table[m].end());

    std::vector<std::size_t> chosen;
    for (std::size_t d = 0; d < problem.decision_count(); ++d)
        for (std::size_t m = 0; m < table.size(); ++m)
            if (best[m] - table[m][d] <= slack) {
                chosen.push_back(d);
                break;
            }
    return collect(problem, std::move(chosen), gamma, ChoiceKind::optimality);
}

ChoiceSet epsilon_maximal(const DecisionProblem& problem, const Rational& gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    const Rational slack = gamma * range_scale(problem);
    const auto table = expectation_table(problem);

    std::vector<std::size_t> chosen;
    for (std::size_t d = 0; d < problem.decision_count(); ++d) {
        bool undominated = true;
        for (std::size_t e = 0; e < problem.decision_count() && undominated; ++e) {
            bool witnessed = false;
            for (std::size_t m = 0; m < table.size() && !witnessed; ++m)
                witnessed = table[m][e] - table[m][d] <= slack;
            undominated = witnessed;
        }
        if (undominated) chosen.push_back(d);
    }
    return collect(problem, std::move(chosen), gamma, ChoiceKind::maximality);
}

namespace {

// Exact phase-1 simplex deciding feasibility of
//   sum_j lambda_j s_j = p,  sum_j lambda_j = 1,  lambda >= 0.
// Artificial variables start basic; Bland's rule guarantees termination.
bool convex_combination_exists(const ProbabilityCharge& p, const CredalSet& points) {
    const std::size_t k = p.dimension();
    const std::size_t m = points.size();
    const std::size_t rows = k + 1;
    const std::size_t cols = m + rows; // structural then artificial
    const std::size_t rhs = cols;

    std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = points[j][i];
        t[i][rhs] = p[i];
    }
    for (std::size_t j = 0; j < m; ++j) t[k][j] = 1;
    t[k][rhs] = 1;
    for (std::size_t i = 0; i < rows; ++i) t[i][m + i] = 1;

    // Objective row holds reduced costs for minimizing the artificial sum;
    // the RHS cell holds minus the current objective.
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
    auto& obj = t[rows];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < rows; ++i) obj[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i) obj[rhs] -= t[i][rhs];

    while (true) {
        std::size_t entering = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < 0) {
                entering = j;
                break;
            }
        if (entering == cols) break;

        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][entering] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == rows) break; // cannot happen: objective bounded below by 0

        Rational pivot = t[leaving][entering];
        for (auto& v : t[leaving]) v /= pivot;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leaving || t[i][entering] == 0) continue;
            Rational factor = t[i][entering];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[leaving][j];
        }
        basis[leaving] = entering;
    }
    return obj[rhs] == 0;
}

} // namespace

bool in_convex_hull(const ProbabilityCharge& p, const CredalSet& hull_points) {
    if (p.dimension() != hull_points.dimension())
        throw std::invalid_argument("point and hull dimensions do not match");
    return convex_combination_exists(p, hull_points);
}

CredalSet extreme_points(const CredalSet& set) {
    CredalSet unique = set.dedup();
    if (unique.size() == 1) return unique;
    std::vector<ProbabilityCharge> kept;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<ProbabilityCharge> others;
        others.reserve(unique.size() - 1);
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(unique[j]);
        if (!in_convex_hull(unique[i], CredalSet(std::move(others)))) kept.push_back(unique[i]);
    }
    return CredalSet(std::move(kept));
}

} // namespace credal
