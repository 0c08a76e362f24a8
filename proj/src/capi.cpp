#include "credal.h"

#include "choice.hpp"
#include "discretize.hpp"
#include "problem_io.hpp"
#include "verification.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

struct crd_problem {
    credal::DecisionProblem value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

crd_status fail(crd_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
crd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const credal::ParseError& e) {
        return fail(CRD_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CRD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CRD_ERR_INTERNAL, e.what());
    }
}

crd_status require(bool ok, const char* message) {
    return ok ? CRD_OK : fail(CRD_ERR_INVALID_ARGUMENT, message);
}

} // namespace

extern "C" {

const char* crd_version(void) {
    return "1.0.0";
}

const char* crd_last_error(void) {
    return g_last_error.c_str();
}

void crd_string_free(char* text) {
    delete[] text;
}

crd_status crd_problem_from_json(const char* json_text, crd_problem** out) {
    if (crd_status s = require(json_text && out, "null argument")) return s;
    return guarded([&] {
        *out = new crd_problem{credal::problem_from_json(json_text)};
        return CRD_OK;
    });
}

void crd_problem_free(crd_problem* problem) {
    delete problem;
}

crd_status crd_problem_to_json(const crd_problem* problem, char** out_json) {
    if (crd_status s = require(problem && out_json, "null argument")) return s;
    return guarded([&] {
        *out_json = copy_string(credal::problem_to_json(problem->value));
        return CRD_OK;
    });
}

crd_status crd_problem_counts(const crd_problem* problem, size_t* out_states,
                              size_t* out_decisions, size_t* out_credal_members) {
    if (crd_status s = require(problem != nullptr, "null problem")) return s;
    if (out_states) *out_states = problem->value.state_count();
    if (out_decisions) *out_decisions = problem->value.decision_count();
    if (out_credal_members) *out_credal_members = problem->value.credal().size();
    return CRD_OK;
}

crd_status crd_problem_range_scale(const crd_problem* problem, char** out_rational) {
    if (crd_status s = require(problem && out_rational, "null argument")) return s;
    return guarded([&] {
        *out_rational = copy_string(credal::format_rational(credal::range_scale(problem->value)));
        return CRD_OK;
    });
}

crd_status crd_choose(const crd_problem* problem, crd_choice_kind kind, const char* gamma,
                      char** out_json) {
    if (crd_status s = require(problem && gamma && out_json, "null argument")) return s;
    if (crd_status s = require(kind == CRD_CHOICE_OPTIMALITY || kind == CRD_CHOICE_MAXIMALITY,
                               "unknown choice kind"))
        return s;
    return guarded([&] {
        credal::Rational level = credal::parse_rational(gamma);
        credal::ChoiceSet chosen = kind == CRD_CHOICE_OPTIMALITY
                                       ? credal::epsilon_optimal(problem->value, level)
                                       : credal::epsilon_maximal(problem->value, level);
        nlohmann::ordered_json doc;
        doc["kind"] = kind == CRD_CHOICE_OPTIMALITY ? "optimality" : "maximality";
        doc["gamma"] = credal::format_rational(level);
        doc["range_scale"] = credal::format_rational(credal::range_scale(problem->value));
        doc["chosen"] = chosen.chosen_labels;
        *out_json = copy_string(doc.dump(2) + "\n");
        return CRD_OK;
    });
}

crd_status crd_discretize(const crd_problem* problem, const char* eps, const char* delta,
                          char** out_problem_json, char** out_report_json) {
    if (crd_status s =
            require(problem && eps && delta && out_problem_json && out_report_json,
                    "null argument"))
        return s;
    return guarded([&] {
        credal::Rational eps_value = credal::parse_rational(eps);
        credal::Rational delta_value = credal::parse_rational(delta);
        if (eps_value <= 0 || eps_value >= credal::Rational(1, 2))
            return fail(CRD_ERR_INVALID_ARGUMENT, "eps must lie in (0, 1/2)");
        if (delta_value <= 0) return fail(CRD_ERR_INVALID_ARGUMENT, "delta must be > 0");
        credal::DiscretizationReport report =
            credal::discretize(problem->value, eps_value, delta_value);
        *out_problem_json = copy_string(credal::problem_to_json(report.approx_problem));
        *out_report_json = copy_string(
            credal::discretization_report_json(report, problem->value.state_labels()));
        return CRD_OK;
    });
}

crd_status crd_partition_size_bound(double eps, unsigned d_count, double* out) {
    if (crd_status s = require(out != nullptr, "null output")) return s;
    return guarded([&] {
        *out = credal::partition_size_bound(eps, d_count);
        return CRD_OK;
    });
}

crd_status crd_credal_size_bound(uint64_t n_cells, double delta, double* out) {
    if (crd_status s = require(out != nullptr, "null output")) return s;
    return guarded([&] {
        *out = credal::credal_size_bound(n_cells, delta);
        return CRD_OK;
    });
}

crd_status crd_curve_point(double gamma_star, unsigned d_count, double eps, double* out) {
    if (crd_status s = require(out != nullptr, "null output")) return s;
    return guarded([&] {
        *out = credal::gamma_curve(gamma_star, d_count, {eps}).front().second;
        return CRD_OK;
    });
}

crd_status crd_verify(const crd_verify_options* options, char** out_report_json) {
    if (crd_status s = require(options && out_report_json, "null argument")) return s;
    return guarded([&] {
        credal::VerifyOptions opts;
        opts.trials = options->trials;
        opts.seed = options->seed;
        opts.max_states = options->max_states;
        opts.max_decisions = options->max_decisions;
        credal::VerifyReport report = credal::run_verification(opts);
        *out_report_json = copy_string(credal::verify_report_json(report));
        if (!report.all_passed())
            return fail(CRD_ERR_VIOLATION, "verification found a counterexample");
        return CRD_OK;
    });
}

} // extern "C"
