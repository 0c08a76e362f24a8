#include "problem_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace credal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Rational entry_to_rational(const ordered_json& value, const std::string& where) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return Rational(Int(value.get<std::int64_t>()));
        if (value.is_number_unsigned()) return Rational(Int(value.get<std::uint64_t>()));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected an exact number written as a string or integer");
}

std::vector<std::string> string_list(const ordered_json& value, const std::string& where) {
    if (!value.is_array() || value.empty())
        throw ParseError(where + ": expected a non-empty array of strings");
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_string()) throw ParseError(where + ": expected a string");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

DecisionProblem problem_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream msg;
        msg << "line " << line << ", column " << column << ": " << e.what();
        throw ParseError(msg.str());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    for (const char* key : {"states", "decisions", "loss", "credal"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");

    auto states = string_list(doc["states"], "states");
    auto decisions = string_list(doc["decisions"], "decisions");

    const auto& loss_json = doc["loss"];
    if (!loss_json.is_array() || loss_json.size() != decisions.size())
        throw ParseError("loss: expected one row per decision");
    std::vector<std::vector<Rational>> loss;
    loss.reserve(loss_json.size());
    for (std::size_t d = 0; d < loss_json.size(); ++d) {
        const auto& row = loss_json[d];
        if (!row.is_array() || row.size() != states.size())
            throw ParseError("loss[" + std::to_string(d) + "]: expected one entry per state");
        std::vector<Rational> values;
        values.reserve(row.size());
        for (std::size_t w = 0; w < row.size(); ++w)
            values.push_back(entry_to_rational(
                row[w], "loss[" + std::to_string(d) + "][" + std::to_string(w) + "]"));
        loss.push_back(std::move(values));
    }

    const auto& credal_json = doc["credal"];
    if (!credal_json.is_array() || credal_json.empty())
        throw ParseError("credal: expected a non-empty array of probability vectors");
    std::vector<ProbabilityCharge> members;
    members.reserve(credal_json.size());
    for (std::size_t m = 0; m < credal_json.size(); ++m) {
        const auto& row = credal_json[m];
        if (!row.is_array() || row.size() != states.size())
            throw ParseError("credal[" + std::to_string(m) + "]: expected one entry per state");
        std::vector<Rational> weights;
        weights.reserve(row.size());
        for (std::size_t w = 0; w < row.size(); ++w)
            weights.push_back(entry_to_rational(
                row[w], "credal[" + std::to_string(m) + "][" + std::to_string(w) + "]"));
        try {
            members.emplace_back(std::move(weights));
        } catch (const std::invalid_argument& e) {
            throw ParseError("credal[" + std::to_string(m) + "]: " + e.what());
        }
    }

    try {
        return DecisionProblem(std::move(states), std::move(decisions), std::move(loss),
                               CredalSet(std::move(members)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace {

ordered_json problem_to_json_value(const DecisionProblem& problem) {
    ordered_json doc;
    doc["states"] = problem.state_labels();
    doc["decisions"] = problem.decision_labels();
    ordered_json loss = ordered_json::array();
    for (const auto& row : problem.loss()) {
        ordered_json out_row = ordered_json::array();
        for (const auto& value : row) out_row.push_back(format_rational(value));
        loss.push_back(std::move(out_row));
    }
    doc["loss"] = std::move(loss);
    ordered_json credal = ordered_json::array();
    for (const auto& member : problem.credal().members()) {
        ordered_json out_row = ordered_json::array();
        for (const auto& weight : member.weights()) out_row.push_back(format_rational(weight));
        credal.push_back(std::move(out_row));
    }
    doc["credal"] = std::move(credal);
    return doc;
}

} // namespace

std::string problem_to_json(const DecisionProblem& problem) {
    return problem_to_json_value(problem).dump(2) + "\n";
}

std::string discretization_report_json(const DiscretizationReport& report,
                                       const std::vector<std::string>& source_state_labels) {
    ordered_json doc;
    doc["eps"] = format_rational(report.eps);
    doc["delta"] = format_rational(report.delta);
    doc["cells"] = report.partition.cell_count();
    ordered_json cells = ordered_json::array();
    for (const auto& cell : report.partition.cells()) {
        ordered_json members = ordered_json::array();
        for (std::size_t w : cell) members.push_back(source_state_labels[w]);
        cells.push_back(std::move(members));
    }
    doc["cell_members"] = std::move(cells);
    doc["grid_denominator"] = report.grid_denominator;
    doc["approx_credal_size"] = report.approx_problem.credal().size();
    doc["partition_bound"] = format_rational(report.partition_bound);
    doc["credal_bound"] = report.credal_bound.str();
    doc["loss_close"] = report.loss_close_ok;
    doc["credal_close"] = report.credal_close_ok;
    return doc.dump(2) + "\n";
}

} // namespace credal
