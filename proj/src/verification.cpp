#include "verification.hpp"

#include "choice.hpp"
#include "discretize.hpp"
#include "problem_io.hpp"
#include "relations.hpp"
#include "simplex_grid.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace credal {

bool VerifyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.violations == 0; });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

namespace {

// splitmix64: tiny, fully specified, identical on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from {0, ..., n-1}.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }
};

constexpr unsigned kMaxDenominator = 12;

Rational random_unit_value(Rng& rng) {
    std::uint64_t q = 1 + rng.below(kMaxDenominator);
    std::uint64_t k = rng.below(q + 1);
    return Rational(Int(k), Int(q));
}

ProbabilityCharge random_charge(Rng& rng, std::size_t n) {
    std::uint64_t q = 1 + rng.below(kMaxDenominator);
    std::vector<std::uint64_t> counts(n, 0);
    std::uint64_t left = q;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        counts[i] = rng.below(left + 1);
        left -= counts[i];
    }
    counts[n - 1] = left;
    for (std::size_t i = n; i > 1; --i) // shuffle to debias position
        std::swap(counts[i - 1], counts[rng.below(i)]);
    std::vector<Rational> weights;
    weights.reserve(n);
    for (std::uint64_t c : counts) weights.emplace_back(Int(c), Int(q));
    return ProbabilityCharge(std::move(weights));
}

DecisionProblem random_problem(Rng& rng, unsigned max_states, unsigned max_decisions) {
    std::size_t states = 1 + rng.below(max_states);
    std::size_t decisions = 1 + rng.below(max_decisions);
    std::vector<std::string> state_labels, decision_labels;
    for (std::size_t w = 0; w < states; ++w) state_labels.push_back("w" + std::to_string(w + 1));
    for (std::size_t d = 0; d < decisions; ++d)
        decision_labels.push_back("d" + std::to_string(d + 1));
    std::vector<std::vector<Rational>> loss(decisions);
    for (auto& row : loss) {
        row.reserve(states);
        for (std::size_t w = 0; w < states; ++w) row.push_back(random_unit_value(rng));
    }
    std::size_t credal_size = 1 + rng.below(4);
    std::vector<ProbabilityCharge> members;
    for (std::size_t m = 0; m < credal_size; ++m) members.push_back(random_charge(rng, states));
    return DecisionProblem(std::move(state_labels), std::move(decision_labels), std::move(loss),
                           CredalSet(std::move(members)));
}

using Clock = std::chrono::steady_clock;

class Tracker {
public:
    explicit Tracker(std::string name) { result_.name = std::move(name); }

    /// Records one assertion. make_detail is only invoked on the first
    /// violation, to build the counterexample dump.
    template <typename Detail>
    void check(bool ok, Detail&& make_detail) {
        ++result_.checks;
        if (ok) return;
        ++result_.violations;
        if (!result_.counterexample) result_.counterexample = make_detail();
    }

    void skip() { ++result_.skipped; }
    void add_elapsed(double seconds) { result_.elapsed_seconds += seconds; }
    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string counterexample_json(const std::string& property, std::uint64_t trial,
                                const DecisionProblem& problem, const std::string& detail) {
    nlohmann::ordered_json doc;
    doc["property"] = property;
    doc["trial"] = trial;
    doc["detail"] = detail;
    doc["problem"] = nlohmann::ordered_json::parse(problem_to_json(problem));
    return doc.dump(2);
}

std::string set_to_string(const ChoiceSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.chosen_labels.size(); ++i) {
        if (i) out += ",";
        out += set.chosen_labels[i];
    }
    return out + "}";
}

bool same_chosen(const ChoiceSet& a, const ChoiceSet& b) {
    return a.chosen_indices == b.chosen_indices;
}

const std::vector<Rational>& certificate_levels() {
    static const std::vector<Rational> levels = {Rational(1, 2), Rational(1, 4), Rational(1, 10)};
    return levels;
}

const std::vector<Rational>& containment_levels() {
    static const std::vector<Rational> levels = {Rational(1, 10), Rational(1, 20)};
    return levels;
}

const std::vector<Rational>& gamma_levels() {
    static const std::vector<Rational> levels = {Rational(0), Rational(1, 20), Rational(1, 10)};
    return levels;
}

std::vector<Rational> geometric_ladder(unsigned lowest_power) {
    std::vector<Rational> ladder;
    Rational step = 1;
    for (unsigned k = 0; k <= lowest_power; ++k) {
        ladder.push_back(step);
        step /= 2;
    }
    return ladder;
}

class Harness {
public:
    explicit Harness(const VerifyOptions& options)
        : options_(options),
          inflate_(options.inflate_override
                       ? options.inflate_override
                       : [](const Rational& g, const Rational& e, const Rational& d) {
                             return inflate_levels(g, e, d);
                         }) {}

    VerifyReport run() {
        check_witness();
        for (std::uint64_t trial = 0; trial < options_.trials; ++trial) {
            Rng rng(options_.seed ^ (0xa076bc9d69d5e9c5ull + trial * 0x9e3779b97f4a7c15ull));
            DecisionProblem problem =
                random_problem(rng, options_.max_states, options_.max_decisions);
            run_certificates(trial, problem);
            run_expectation_bounds(trial, problem);
            run_optimal_containments(trial, problem);
            run_maximal_containments(trial, problem);
            run_choice_algebra(trial, rng, problem);
        }
        VerifyReport report;
        report.trials = options_.trials;
        report.seed = options_.seed;
        for (auto& t : trackers_) report.properties.push_back(t.take());
        return report;
    }

private:
    enum Prop {
        kPartitionCertificate,
        kCredalCertificate,
        kExpectationBounds,
        kOptimalForward,
        kOptimalBackward,
        kMaximalForward,
        kMaximalBackward,
        kOptSubsetMax,
        kLevelNesting,
        kAffineInvariance,
        kSingletonEquivalence,
        kMaxHullInvariance,
        kExtremePointReduction,
        kLadderStability,
        kHullSensitivityWitness,
    };

    class Timed {
    public:
        Timed(Harness& h, Prop p) : tracker_(h.trackers_[p]), start_(Clock::now()) {}
        ~Timed() {
            tracker_.add_elapsed(std::chrono::duration<double>(Clock::now() - start_).count());
        }
        Tracker& operator*() { return tracker_; }
        Tracker* operator->() { return &tracker_; }

    private:
        Tracker& tracker_;
        Clock::time_point start_;
    };

    void check_witness() {
        Timed t(*this, kHullSensitivityWitness);
        DecisionProblem base = hull_sensitivity_witness();
        DecisionProblem extended = hull_sensitivity_witness_extended();
        ChoiceSet opt_base = epsilon_optimal(base, 0);
        ChoiceSet opt_ext = epsilon_optimal(extended, 0);
        ChoiceSet max_base = epsilon_maximal(base, 0);
        ChoiceSet max_ext = epsilon_maximal(extended, 0);
        bool ok = !same_chosen(opt_base, opt_ext) && same_chosen(max_base, max_ext);
        t->check(ok, [&] {
            return counterexample_json(
                "hull_sensitivity_witness", 0, extended,
                "expected optimal set to change and maximal set to stay: opt " +
                    set_to_string(opt_base) + " vs " + set_to_string(opt_ext) + ", max " +
                    set_to_string(max_base) + " vs " + set_to_string(max_ext));
        });
    }

    void run_certificates(std::uint64_t trial, const DecisionProblem& problem) {
        Rational per_decision_cap = 0; // (1+1/eps)^|D| computed per eps below
        for (const Rational& eps : certificate_levels()) {
            PartitionResult built = build_partition(problem, eps);
            {
                Timed t(*this, kPartitionCertificate);
                t->check(loss_close(problem, built.coarse, built.partition, eps), [&] {
                    return counterexample_json("partition_certificate", trial, problem,
                                               "loss_close failed at eps=" + format_rational(eps));
                });
                per_decision_cap = 1;
                for (std::size_t d = 0; d < problem.decision_count(); ++d)
                    per_decision_cap *= 1 + 1 / eps;
                t->check(Rational(Int(built.partition.cell_count())) <= per_decision_cap, [&] {
                    return counterexample_json("partition_certificate", trial, problem,
                                               "cell count exceeds bound at eps=" +
                                                   format_rational(eps));
                });
            }
            Timed t(*this, kCredalCertificate);
            for (const Rational& delta : certificate_levels()) {
                CredalSet coarse = approximate_credal(problem.credal(), built.partition, delta);
                t->check(credal_close(problem.credal(), coarse, built.partition, delta), [&] {
                    return counterexample_json("credal_certificate", trial, problem,
                                               "credal_close failed at delta=" +
                                                   format_rational(delta));
                });
                const std::size_t n = built.partition.cell_count();
                Int cap = integer_binomial(
                    Int(grid_denominator(n, delta)) + Int(n) - 1, Int(n) - 1);
                t->check(Int(coarse.size()) <= cap, [&] {
                    return counterexample_json("credal_certificate", trial, problem,
                                               "coarse credal size exceeds bound at delta=" +
                                                   format_rational(delta));
                });
            }
        }
    }

    void run_expectation_bounds(std::uint64_t trial, const DecisionProblem& problem) {
        Timed t(*this, kExpectationBounds);
        for (const Rational& eps : containment_levels()) {
            PartitionResult built = build_partition(problem, eps);
            for (const Rational& delta : containment_levels()) {
                const std::uint64_t N = grid_denominator(built.partition.cell_count(), delta);
                for (const auto& p : problem.credal().members()) {
                    ProbabilityCharge marginal = built.partition.project(p);
                    ProbabilityCharge rounded = round_to_grid(marginal, N).to_charge();
                    for (std::size_t d = 0; d < problem.decision_count(); ++d) {
                        Gamble f = problem.gamble_for(d);
                        Gamble coarse_f = built.coarse.gamble_for(d);
                        Rational gap = abs(expectation(f, p) - expectation(coarse_f, rounded));
                        auto [ground_bound, coarse_bound] =
                            expectation_error_bounds(f.range(), coarse_f.range(), eps, delta);
                        t->check(gap <= ground_bound && gap <= coarse_bound, [&] {
                            return counterexample_json(
                                "expectation_bounds", trial, problem,
                                "gap " + format_rational(gap) + " exceeds bounds " +
                                    format_rational(ground_bound) + " / " +
                                    format_rational(coarse_bound) + " at eps=" +
                                    format_rational(eps) + " delta=" + format_rational(delta));
                        });
                    }
                }
            }
        }
    }

    void run_optimal_containments(std::uint64_t trial, const DecisionProblem& problem) {
        for (const Rational& eps : containment_levels()) {
            PartitionResult built = build_partition(problem, eps);
            for (const Rational& delta : containment_levels()) {
                CredalSet coarse_credal =
                    approximate_credal(problem.credal(), built.partition, delta);
                DecisionProblem approx = built.coarse.with_credal(coarse_credal);
                for (const Rational& gamma : gamma_levels()) {
                    InflatedLevels levels = inflate_(gamma, eps, delta);
                    {
                        Timed t(*this, kOptimalForward);
                        ChoiceSet ground = epsilon_optimal(problem, gamma);
                        ChoiceSet inflated = epsilon_optimal(approx, levels.forward);
                        t->check(ground.subset_of(inflated), [&] {
                            return counterexample_json(
                                "optimal_containment_forward", trial, problem,
                                "ground " + set_to_string(ground) + " not within coarse " +
                                    set_to_string(inflated) + " at gamma=" +
                                    format_rational(gamma) + " eps=" + format_rational(eps) +
                                    " delta=" + format_rational(delta));
                        });
                    }
                    Timed t(*this, kOptimalBackward);
                    ChoiceSet coarse = epsilon_optimal(approx, gamma);
                    ChoiceSet inflated = epsilon_optimal(problem, levels.backward);
                    t->check(coarse.subset_of(inflated), [&] {
                        return counterexample_json(
                            "optimal_containment_backward", trial, problem,
                            "coarse " + set_to_string(coarse) + " not within ground " +
                                set_to_string(inflated) + " at gamma=" + format_rational(gamma) +
                                " eps=" + format_rational(eps) + " delta=" +
                                format_rational(delta));
                    });
                }
            }
        }
    }

    void run_maximal_containments(std::uint64_t trial, const DecisionProblem& problem) {
        // The extreme-point route assumes a non-degenerate range scale.
        if (range_scale(problem) == 0) {
            Timed f(*this, kMaximalForward);
            f->skip();
            Timed b(*this, kMaximalBackward);
            b->skip();
            return;
        }
        static const std::vector<Rational> eta_ladder = {
            Rational(1, 1 << 1), Rational(1, 1 << 5), Rational(1, 1 << 10),
            Rational(1, 1 << 15), Rational(1, 1 << 20)};
        CredalSet extremes = extreme_points(problem.credal());
        for (const Rational& eps : containment_levels()) {
            PartitionResult built = build_partition(problem, eps);
            for (const Rational& delta : containment_levels()) {
                CredalSet coarse_credal = approximate_credal(extremes, built.partition, delta);
                DecisionProblem approx = built.coarse.with_credal(coarse_credal);
                for (const Rational& gamma : gamma_levels()) {
                    InflatedLevels levels = inflate_(gamma, eps, delta);
                    ChoiceSet ground = epsilon_maximal(problem, gamma);
                    ChoiceSet coarse = epsilon_maximal(approx, gamma);
                    for (const Rational& eta : eta_ladder) {
                        {
                            Timed t(*this, kMaximalForward);
                            ChoiceSet inflated = epsilon_maximal(approx, levels.forward + eta);
                            t->check(ground.subset_of(inflated), [&] {
                                return counterexample_json(
                                    "maximal_containment_forward", trial, problem,
                                    "ground " + set_to_string(ground) + " not within coarse " +
                                        set_to_string(inflated) + " at gamma=" +
                                        format_rational(gamma) + " eps=" + format_rational(eps) +
                                        " delta=" + format_rational(delta) + " eta=" +
                                        format_rational(eta));
                            });
                        }
                        Timed t(*this, kMaximalBackward);
                        ChoiceSet inflated = epsilon_maximal(problem, levels.backward + eta);
                        t->check(coarse.subset_of(inflated), [&] {
                            return counterexample_json(
                                "maximal_containment_backward", trial, problem,
                                "coarse " + set_to_string(coarse) + " not within ground " +
                                    set_to_string(inflated) + " at gamma=" +
                                    format_rational(gamma) + " eps=" + format_rational(eps) +
                                    " delta=" + format_rational(delta) + " eta=" +
                                    format_rational(eta));
                        });
                    }
                }
            }
        }
    }

    void run_choice_algebra(std::uint64_t trial, Rng& rng, const DecisionProblem& problem) {
        static const std::vector<Rational> gammas = {Rational(0), Rational(1, 10)};

        {
            Timed t(*this, kOptSubsetMax);
            for (const Rational& gamma : gammas) {
                ChoiceSet opt = epsilon_optimal(problem, gamma);
                ChoiceSet max = epsilon_maximal(problem, gamma);
                t->check(opt.subset_of(max), [&] {
                    return counterexample_json("opt_subset_max", trial, problem,
                                               "opt " + set_to_string(opt) + " not within max " +
                                                   set_to_string(max) + " at gamma=" +
                                                   format_rational(gamma));
                });
            }
        }
        {
            Timed t(*this, kLevelNesting);
            static const std::vector<Rational> steps = {Rational(0), Rational(1, 20),
                                                        Rational(1, 10)};
            for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
                t->check(epsilon_optimal(problem, steps[i])
                             .subset_of(epsilon_optimal(problem, steps[i + 1])),
                         [&] {
                             return counterexample_json("level_nesting", trial, problem,
                                                        "optimal set not nested between levels");
                         });
                t->check(epsilon_maximal(problem, steps[i])
                             .subset_of(epsilon_maximal(problem, steps[i + 1])),
                         [&] {
                             return counterexample_json("level_nesting", trial, problem,
                                                        "maximal set not nested between levels");
                         });
            }
        }
        {
            Timed t(*this, kAffineInvariance);
            static const std::vector<Rational> scales = {Rational(1, 2), Rational(2),
                                                         Rational(3, 2)};
            Rational a = scales[rng.below(scales.size())];
            Rational b = random_unit_value(rng) - Rational(1, 2);
            std::vector<std::vector<Rational>> scaled_loss(problem.loss());
            for (auto& row : scaled_loss)
                for (auto& value : row) value = a * value + b;
            DecisionProblem transformed(problem.state_labels(), problem.decision_labels(),
                                        std::move(scaled_loss), problem.credal());
            for (const Rational& gamma : gammas) {
                t->check(same_chosen(epsilon_optimal(problem, gamma),
                                     epsilon_optimal(transformed, gamma)),
                         [&] {
                             return counterexample_json("affine_invariance", trial, problem,
                                                        "optimal set changed under aL+b");
                         });
                t->check(same_chosen(epsilon_maximal(problem, gamma),
                                     epsilon_maximal(transformed, gamma)),
                         [&] {
                             return counterexample_json("affine_invariance", trial, problem,
                                                        "maximal set changed under aL+b");
                         });
            }
        }
        {
            Timed t(*this, kSingletonEquivalence);
            DecisionProblem single =
                problem.with_credal(CredalSet({problem.credal().members().front()}));
            for (const Rational& gamma : gammas)
                t->check(same_chosen(epsilon_optimal(single, gamma),
                                     epsilon_maximal(single, gamma)),
                         [&] {
                             return counterexample_json(
                                 "singleton_equivalence", trial, single,
                                 "opt and max differ for a singleton credal set");
                         });
        }
        {
            Timed t(*this, kMaxHullInvariance);
            std::vector<ProbabilityCharge> enlarged = problem.credal().members();
            std::size_t additions = 1 + rng.below(2);
            for (std::size_t k = 0; k < additions; ++k)
                enlarged.push_back(random_mixture(rng, problem.credal()));
            DecisionProblem mixed = problem.with_credal(CredalSet(std::move(enlarged)));
            for (const Rational& gamma : gammas)
                t->check(same_chosen(epsilon_maximal(problem, gamma),
                                     epsilon_maximal(mixed, gamma)),
                         [&] {
                             return counterexample_json(
                                 "max_hull_invariance", trial, mixed,
                                 "maximal set changed after adding mixtures at gamma=" +
                                     format_rational(gamma));
                         });
        }
        {
            Timed t(*this, kExtremePointReduction);
            DecisionProblem reduced = problem.with_credal(extreme_points(problem.credal()));
            t->check(same_chosen(epsilon_maximal(problem, 0), epsilon_maximal(reduced, 0)), [&] {
                return counterexample_json("extreme_point_reduction", trial, problem,
                                           "maximal set changed under extreme-point reduction");
            });
        }
        {
            Timed t(*this, kLadderStability);
            if (range_scale(problem) == 0) {
                t->skip();
            } else {
                for (const Rational& eps : gammas) {
                    check_ladder(t, trial, problem, eps, ChoiceKind::maximality);
                    check_ladder(t, trial, problem, eps, ChoiceKind::optimality);
                }
            }
        }
    }

    ProbabilityCharge random_mixture(Rng& rng, const CredalSet& set) {
        std::vector<Rational> weights(set.size());
        Rational total = 0;
        for (auto& w : weights) {
            w = Rational(Int(rng.below(4)));
            total += w;
        }
        if (total == 0) {
            weights.assign(set.size(), 1);
            total = Int(set.size());
        }
        std::vector<Rational> mix(set.dimension(), 0);
        for (std::size_t m = 0; m < set.size(); ++m)
            for (std::size_t i = 0; i < set.dimension(); ++i)
                mix[i] += weights[m] / total * set[m][i];
        return ProbabilityCharge(std::move(mix));
    }

    void check_ladder(Timed& t, std::uint64_t trial, const DecisionProblem& problem,
                      const Rational& eps, ChoiceKind kind) {
        auto evaluate = [&](const Rational& level) {
            return kind == ChoiceKind::maximality ? epsilon_maximal(problem, level)
                                                  : epsilon_optimal(problem, level);
        };
        const std::vector<Rational> ladder = geometric_ladder(20);
        ChoiceSet base = evaluate(eps);
        std::vector<std::size_t> intersection = evaluate(eps + ladder.front()).chosen_indices;
        for (const Rational& delta : ladder) {
            ChoiceSet rung = evaluate(eps + delta);
            std::vector<std::size_t> kept;
            for (std::size_t d : intersection)
                if (rung.contains(d)) kept.push_back(d);
            intersection = std::move(kept);
        }
        t->check(intersection == base.chosen_indices, [&] {
            return counterexample_json(
                "ladder_stability", trial, problem,
                std::string(kind == ChoiceKind::maximality ? "maximal" : "optimal") +
                    " set at eps=" + format_rational(eps) +
                    " differs from the ladder intersection");
        });
    }

    const VerifyOptions& options_;
    std::function<InflatedLevels(const Rational&, const Rational&, const Rational&)> inflate_;
    std::vector<Tracker> trackers_ = {
        Tracker("partition_certificate"),    Tracker("credal_certificate"),
        Tracker("expectation_bounds"),       Tracker("optimal_containment_forward"),
        Tracker("optimal_containment_backward"), Tracker("maximal_containment_forward"),
        Tracker("maximal_containment_backward"), Tracker("opt_subset_max"),
        Tracker("level_nesting"),            Tracker("affine_invariance"),
        Tracker("singleton_equivalence"),    Tracker("max_hull_invariance"),
        Tracker("extreme_point_reduction"),  Tracker("ladder_stability"),
        Tracker("hull_sensitivity_witness"),
    };
};

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (options.max_states < 1 || options.max_decisions < 1)
        throw std::invalid_argument("dimension maxima must be >= 1");
    return Harness(options).run();
}

std::string verify_report_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["all_passed"] = report.all_passed();
    nlohmann::ordered_json properties = nlohmann::ordered_json::array();
    for (const auto& p : report.properties) {
        nlohmann::ordered_json entry;
        entry["name"] = p.name;
        entry["checks"] = p.checks;
        entry["violations"] = p.violations;
        entry["skipped"] = p.skipped;
        if (p.counterexample)
            entry["counterexample"] = nlohmann::ordered_json::parse(*p.counterexample);
        properties.push_back(std::move(entry));
    }
    doc["properties"] = std::move(properties);
    return doc.dump(2) + "\n";
}

DecisionProblem random_lattice_problem(std::uint64_t seed, unsigned max_states,
                                       unsigned max_decisions) {
    Rng rng(seed);
    return random_problem(rng, max_states, max_decisions);
}

DecisionProblem hull_sensitivity_witness() {
    // Vertex charges make d3 never optimal; its gamble beats both rivals
    // under the midpoint charge, so adding the midpoint enlarges the optimal
    // set while the maximal set stays put.
    std::vector<std::vector<Rational>> loss = {
        {Rational(-1), Rational(0)},
        {Rational(0), Rational(-1)},
        {Rational(-3, 5), Rational(-3, 5)},
    };
    CredalSet credal({ProbabilityCharge({Rational(1), Rational(0)}),
                      ProbabilityCharge({Rational(0), Rational(1)})});
    return DecisionProblem({"w1", "w2"}, {"d1", "d2", "d3"}, std::move(loss), std::move(credal));
}

DecisionProblem hull_sensitivity_witness_extended() {
    DecisionProblem base = hull_sensitivity_witness();
    std::vector<ProbabilityCharge> members = base.credal().members();
    members.push_back(ProbabilityCharge({Rational(1, 2), Rational(1, 2)}));
    return base.with_credal(CredalSet(std::move(members)));
}

} // namespace credal
