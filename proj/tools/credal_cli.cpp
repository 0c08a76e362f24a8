// Command-line front end for the credal shared library. All computation goes
// through the C API in credal.h; this file only parses flags, moves files,
// and formats tables.

#include <credal.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitUsage, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitUsage, "cannot write " + path);
    out << content;
}

std::string fnv1a_digest(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

std::string take_string(char* text) {
    std::string out = text ? text : "";
    crd_string_free(text);
    return out;
}

void check(crd_status status, int usage_exit = kExitUsage) {
    if (status == CRD_OK) return;
    die(status == CRD_ERR_VIOLATION ? kExitViolation : usage_exit, crd_last_error());
}

using ProblemHandle = std::unique_ptr<crd_problem, decltype(&crd_problem_free)>;

ProblemHandle load_problem(const std::string& path, std::string* digest = nullptr) {
    std::string text = read_file(path);
    if (digest) *digest = fnv1a_digest(text);
    crd_problem* problem = nullptr;
    if (crd_problem_from_json(text.c_str(), &problem) != CRD_OK)
        die(kExitUsage, path + ": " + crd_last_error());
    return ProblemHandle(problem, &crd_problem_free);
}

std::string echo_command(int argc, char** argv) {
    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }
    return echo;
}

void maybe_write_report(const std::string& path, const ordered_json& doc) {
    if (!path.empty()) write_file(path, doc.dump(2) + "\n");
}

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

std::string compact(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

void print_table(const std::string& corner, const std::vector<std::string>& column_labels,
                 const std::vector<std::string>& row_labels,
                 const std::vector<std::vector<double>>& values) {
    std::printf("%14s", corner.c_str());
    for (const auto& label : column_labels) std::printf("%9s", label.c_str());
    std::printf("\n");
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        std::printf("%14s", row_labels[r].c_str());
        for (double v : values[r]) std::printf("%9s", fixed(v, 1).c_str());
        std::printf("\n");
    }
}

// ---- subcommands ----------------------------------------------------------

struct ChooseArgs {
    std::string file;
    std::string kind = "opt";
    std::string gamma = "0";
    std::string report_path;
};

int run_choose(const ChooseArgs& args, const std::string& command) {
    std::string digest;
    ProblemHandle problem = load_problem(args.file, &digest);
    char* out = nullptr;
    check(crd_choose(problem.get(),
                     args.kind == "opt" ? CRD_CHOICE_OPTIMALITY : CRD_CHOICE_MAXIMALITY,
                     args.gamma.c_str(), &out));
    ordered_json result = ordered_json::parse(take_string(out));

    std::string line;
    for (const auto& label : result["chosen"]) {
        if (!line.empty()) line += ' ';
        line += label.get<std::string>();
    }
    std::printf("%s\n", line.c_str());
    std::printf("R_D: %s\n", result["range_scale"].get<std::string>().c_str());

    ordered_json report;
    report["command"] = command;
    report["input_digest"] = digest;
    report["result"] = result;
    maybe_write_report(args.report_path, report);
    return kExitOk;
}

struct DiscretizeArgs {
    std::string file;
    std::string eps;
    std::string delta;
    std::string out_path;
};

int run_discretize(const DiscretizeArgs& args, const std::string& command) {
    std::string digest;
    ProblemHandle problem = load_problem(args.file, &digest);
    char* problem_json = nullptr;
    char* report_json = nullptr;
    check(crd_discretize(problem.get(), args.eps.c_str(), args.delta.c_str(), &problem_json,
                         &report_json));
    std::string coarse = take_string(problem_json);
    std::string sidecar = take_string(report_json);

    write_file(args.out_path, coarse);
    ordered_json report = ordered_json::parse(sidecar);
    report["command"] = command;
    report["input_digest"] = digest;
    write_file(args.out_path + ".report.json", report.dump(2) + "\n");

    std::printf("cells: %llu\n",
                static_cast<unsigned long long>(report["cells"].get<std::uint64_t>()));
    std::printf("grid_denominator: %llu\n",
                static_cast<unsigned long long>(report["grid_denominator"].get<std::uint64_t>()));
    std::printf("approx_credal_size: %llu\n",
                static_cast<unsigned long long>(
                    report["approx_credal_size"].get<std::uint64_t>()));
    std::printf("loss_close: %s\n", report["loss_close"].get<bool>() ? "true" : "false");
    std::printf("credal_close: %s\n", report["credal_close"].get<bool>() ? "true" : "false");
    std::printf("wrote: %s\n", args.out_path.c_str());
    return kExitOk;
}

struct BoundsArgs {
    std::vector<double> eps = {0.2, 0.1, 0.05, 0.02, 0.01};
    std::vector<std::uint64_t> dcount = {2, 4, 8, 16, 32};
    std::vector<std::uint64_t> cells = {4, 8, 12, 16, 20, 24, 28, 32};
    std::vector<double> delta = {0.2, 0.1, 0.05};
    std::string report_path;
};

int run_bounds(const BoundsArgs& args, const std::string& command) {
    ordered_json report;
    report["command"] = command;

    std::printf("partition size bound: log10(cells) <= |D| log10(1 + 1/eps)\n");
    std::vector<std::string> eps_labels, row_labels;
    for (double e : args.eps) eps_labels.push_back(compact(e));
    std::vector<std::vector<double>> table;
    for (std::uint64_t d : args.dcount) {
        row_labels.push_back(std::to_string(d));
        std::vector<double> row;
        for (double e : args.eps) {
            double v = 0;
            check(crd_partition_size_bound(e, static_cast<unsigned>(d), &v));
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    print_table("|D| \\ eps", eps_labels, row_labels, table);
    report["partition_table"] = table;

    std::printf("\ncredal size bound: log10(members) <= log10 C(n(1 + 1/delta), n - 1)\n");
    std::vector<std::string> delta_labels;
    for (double d : args.delta) delta_labels.push_back(compact(d));
    row_labels.clear();
    table.clear();
    for (std::uint64_t n : args.cells) {
        row_labels.push_back(std::to_string(n));
        std::vector<double> row;
        for (double d : args.delta) {
            double v = 0;
            check(crd_credal_size_bound(n, d, &v));
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    print_table("n \\ delta", delta_labels, row_labels, table);
    report["credal_table"] = table;

    std::printf("\nsame bound on a log10(n) scale (n = 5, 25, ..., 78125)\n");
    row_labels.clear();
    table.clear();
    std::uint64_t n = 1;
    for (int k = 1; k <= 7; ++k) {
        n *= 5;
        row_labels.push_back(fixed(std::log10(static_cast<double>(n)), 1));
        std::vector<double> row;
        for (double d : args.delta) {
            double v = 0;
            check(crd_credal_size_bound(n, d, &v));
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    print_table("log10(n) \\ delta", delta_labels, row_labels, table);
    report["credal_log_table"] = table;

    maybe_write_report(args.report_path, report);
    return kExitOk;
}

struct CurveArgs {
    double gamma_star = 0.2;
    unsigned dcount = 2;
    unsigned steps = 39;
    std::vector<double> eps;
    std::string report_path;
};

int run_curve(const CurveArgs& args, const std::string& command) {
    if (args.gamma_star <= 0) die(kExitUsage, "--gamma-star must be > 0");
    if (args.steps < 1) die(kExitUsage, "--steps must be >= 1");
    std::vector<double> grid = args.eps;
    if (grid.empty())
        for (unsigned k = 1; k <= args.steps; ++k)
            grid.push_back(args.gamma_star * k / (args.steps + 1));

    std::vector<std::pair<double, double>> points;
    for (double e : grid) {
        double v = 0;
        check(crd_curve_point(args.gamma_star, args.dcount, e, &v));
        points.emplace_back(e, v);
    }

    std::printf("eps,log10_bound\n");
    for (const auto& [e, v] : points) std::printf("%s,%s\n", compact(e).c_str(), fixed(v, 6).c_str());

    ordered_json report;
    report["command"] = command;
    ordered_json rows = ordered_json::array();
    for (const auto& [e, v] : points) rows.push_back({e, v});
    report["points"] = std::move(rows);
    maybe_write_report(args.report_path, report);
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    unsigned max_states = 8;
    unsigned max_decisions = 4;
    std::string report_path;
};

int run_verify(const VerifyArgs& args) {
    crd_verify_options options{args.trials, args.seed, args.max_states, args.max_decisions};
    auto start = std::chrono::steady_clock::now();
    char* out = nullptr;
    crd_status status = crd_verify(&options, &out);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status != CRD_OK && status != CRD_ERR_VIOLATION) die(kExitUsage, crd_last_error());

    std::string report = take_string(out);
    std::fputs(report.c_str(), stdout);
    if (!args.report_path.empty()) write_file(args.report_path, report);
    std::fprintf(stderr, "verify: trials=%llu seed=%llu elapsed=%.1fs %s\n",
                 static_cast<unsigned long long>(args.trials),
                 static_cast<unsigned long long>(args.seed), elapsed,
                 status == CRD_OK ? "all properties hold" : "VIOLATION FOUND");
    return status == CRD_OK ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision sets, discretization certificates, and size bounds "
                 "for finite decision problems under credal uncertainty"};
    app.require_subcommand(1);

    ChooseArgs choose;
    CLI::App* choose_cmd =
        app.add_subcommand("choose", "compute the chosen decision set of a problem file");
    choose_cmd->add_option("file", choose.file, "problem JSON file")->required();
    choose_cmd->add_option("--kind", choose.kind, "opt (optimality) or max (maximality)")
        ->check(CLI::IsMember({"opt", "max"}));
    choose_cmd->add_option("--gamma", choose.gamma,
                           "slack level as an exact rational (default 0)");
    choose_cmd->add_option("--report", choose.report_path, "write a JSON run report");

    DiscretizeArgs discretize;
    CLI::App* discretize_cmd = app.add_subcommand(
        "discretize", "coarsen a problem to cell states with certified precision");
    discretize_cmd->add_option("file", discretize.file, "problem JSON file")->required();
    discretize_cmd->add_option("--eps", discretize.eps, "loss precision in (0, 1/2)")->required();
    discretize_cmd->add_option("--delta", discretize.delta, "credal L1 precision > 0")->required();
    discretize_cmd->add_option("--out", discretize.out_path, "output problem file")->required();

    BoundsArgs bounds;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "print the partition and credal size bound tables");
    bounds_cmd->add_option("--eps", bounds.eps, "loss precisions")->delimiter(',');
    bounds_cmd->add_option("--dcount", bounds.dcount, "decision counts")->delimiter(',');
    bounds_cmd->add_option("--cells", bounds.cells, "partition sizes")->delimiter(',');
    bounds_cmd->add_option("--delta", bounds.delta, "credal precisions")->delimiter(',');
    bounds_cmd->add_option("--report", bounds.report_path, "write a JSON run report");

    CurveArgs curve;
    CLI::App* curve_cmd = app.add_subcommand(
        "curve", "credal size bound along the budget eps + delta = gamma_star, as CSV");
    curve_cmd->add_option("--gamma-star", curve.gamma_star, "total precision budget");
    curve_cmd->add_option("--dcount", curve.dcount, "decision count");
    curve_cmd->add_option("--steps", curve.steps, "grid points (default 39)");
    curve_cmd->add_option("--eps", curve.eps, "explicit grid points in (0, gamma_star)")
        ->delimiter(',');
    curve_cmd->add_option("--report", curve.report_path, "write a JSON run report");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the randomized exact property suite and report violations");
    verify_cmd->add_option("--trials", verify.trials, "number of random problems");
    verify_cmd->add_option("--seed", verify.seed, "master seed");
    verify_cmd->add_option("--max-states", verify.max_states, "largest state count");
    verify_cmd->add_option("--max-decisions", verify.max_decisions, "largest decision count");
    verify_cmd->add_option("--report", verify.report_path, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = echo_command(argc, argv);
    try {
        if (*choose_cmd) return run_choose(choose, command);
        if (*discretize_cmd) return run_discretize(discretize, command);
        if (*bounds_cmd) return run_bounds(bounds, command);
        if (*curve_cmd) return run_curve(curve, command);
        if (*verify_cmd) return run_verify(verify);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    }
    return kExitUsage;
}
