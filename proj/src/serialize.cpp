#include "qfa/serialize.hpp"

#include <fstream>
#include <set>

#include "qfa/errors.hpp"

namespace qfa {

namespace {

nlohmann::json matrix_to_json(const Matrix& matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& doc, const std::string& name) {
    if (!doc.is_array() || doc.empty()) throw ParseError("matrix '" + name + "' must be a non-empty array of rows");
    const std::size_t rows = doc.size();
    const std::size_t cols = doc[0].is_array() ? doc[0].size() : 0;
    if (cols == 0) throw ParseError("matrix '" + name + "' rows must be non-empty arrays");
    Matrix matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!doc[r].is_array() || doc[r].size() != cols) {
            throw ParseError("matrix '" + name + "' rows must all have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!doc[r][c].is_number()) throw ParseError("matrix '" + name + "' entries must be numbers");
            matrix(r, c) = doc[r][c].get<double>();
        }
    }
    return matrix;
}

template <typename T>
std::set<T> state_set_from_json(const nlohmann::json& doc, const std::string& name) {
    if (!doc.is_array()) throw ParseError("'" + name + "' must be an array of state indices");
    std::set<T> states;
    for (const auto& entry : doc) {
        if (!entry.is_number_unsigned()) throw ParseError("'" + name + "' entries must be non-negative integers");
        states.insert(entry.get<T>());
    }
    return states;
}

const nlohmann::json& require_field(const nlohmann::json& doc, const std::string& name) {
    const auto it = doc.find(name);
    if (it == doc.end()) throw ParseError("missing field '" + name + "'");
    return *it;
}

std::uint64_t uint_field(const nlohmann::json& doc, const std::string& name) {
    const auto& field = require_field(doc, name);
    if (!field.is_number_unsigned()) throw ParseError("'" + name + "' must be a non-negative integer");
    return field.get<std::uint64_t>();
}

Mcqfa mcqfa_from_json(const nlohmann::json& doc) {
    Mcqfa machine;
    machine.num_states = uint_field(doc, "num_states");
    machine.initial_state = doc.contains("initial_state") ? uint_field(doc, "initial_state") : 0;
    machine.accepting = doc.contains("accepting")
                            ? state_set_from_json<std::size_t>(doc["accepting"], "accepting")
                            : std::set<std::size_t>{0};
    const auto& unitaries = require_field(doc, "unitaries");
    if (!unitaries.is_object()) throw ParseError("'unitaries' must be an object");
    machine.unitaries.left_marker = matrix_from_json(require_field(unitaries, "lmark"), "lmark");
    machine.unitaries.letter = matrix_from_json(require_field(unitaries, "a"), "a");
    machine.unitaries.right_marker = matrix_from_json(require_field(unitaries, "rmark"), "rmark");
    validate(machine);
    return machine;
}

UnaryDfa dfa_from_json(const nlohmann::json& doc) {
    UnaryDfa machine;
    machine.tail_len = static_cast<std::uint32_t>(uint_field(doc, "tail_len"));
    machine.cycle_len = static_cast<std::uint32_t>(uint_field(doc, "cycle_len"));
    machine.accepting = state_set_from_json<std::uint32_t>(require_field(doc, "accepting"), "accepting");
    validate(machine);
    return machine;
}

}  // namespace

nlohmann::json to_json(const Mcqfa& machine) {
    return {
        {"type", "mcqfa"},
        {"num_states", machine.num_states},
        {"initial_state", machine.initial_state},
        {"accepting", machine.accepting},
        {"unitaries",
         {{"lmark", matrix_to_json(machine.unitaries.left_marker)},
          {"a", matrix_to_json(machine.unitaries.letter)},
          {"rmark", matrix_to_json(machine.unitaries.right_marker)}}},
    };
}

nlohmann::json to_json(const UnaryDfa& machine) {
    return {
        {"type", "dfa"},
        {"tail_len", machine.tail_len},
        {"cycle_len", machine.cycle_len},
        {"accepting", machine.accepting},
    };
}

nlohmann::json to_json(const SearchReport& report) {
    nlohmann::json doc{
        {"n", report.period},
        {"max_states", report.max_states},
        {"minimal_states", nullptr},
        {"witness", nullptr},
        {"machines_checked", report.machines_checked},
    };
    if (report.minimal_states) doc["minimal_states"] = *report.minimal_states;
    if (report.witness) doc["witness"] = to_json(*report.witness);
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [size, ms] : report.ms_per_size) timings[std::to_string(size)] = ms;
    doc["ms_per_size"] = std::move(timings);
    return doc;
}

Machine machine_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("machine document must be a JSON object");
    const auto& type = require_field(doc, "type");
    if (!type.is_string()) throw ParseError("'type' must be a string");
    const auto tag = type.get<std::string>();
    if (tag == "mcqfa") return mcqfa_from_json(doc);
    if (tag == "dfa") return dfa_from_json(doc);
    throw ParseError("unknown machine type '" + tag + "'");
}

Machine parse_machine(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string{"invalid JSON: "} + err.what());
    }
    return machine_from_json(doc);
}

Machine load_machine(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open machine file: " + path.string());
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_machine(text);
}

void save_machine(const Machine& machine, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path.string());
    std::visit([&out](const auto& m) { out << to_json(m).dump(2) << '\n'; }, machine);
}

}  // namespace qfa
