#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "qfa/mcqfa.hpp"
#include "qfa/oracle.hpp"
#include "qfa/unary_dfa.hpp"

namespace qfa {

using Machine = std::variant<Mcqfa, UnaryDfa>;

/// Machine wire format, JSON:
///   {"type":"mcqfa", "num_states":2, "initial_state":0, "accepting":[0],
///    "unitaries":{"lmark":[[...]], "a":[[...]], "rmark":[[...]]}}
///   {"type":"dfa", "tail_len":0, "cycle_len":4, "accepting":[0]}
/// Matrices are row-major arrays of rows with decimal float entries.
nlohmann::json to_json(const Mcqfa& machine);
nlohmann::json to_json(const UnaryDfa& machine);

/// Search report wire format:
///   {"n", "max_states", "minimal_states", "witness":{...},
///    "machines_checked", "ms_per_size":{"1":...}}
/// minimal_states and witness are null when nothing was found within the
/// bound. ms_per_size carries wall-clock timings and is not stable across
/// runs; everything else is deterministic.
nlohmann::json to_json(const SearchReport& report);

/// Parses a machine document. Schema problems (wrong shapes, missing fields,
/// bad types) throw ParseError; documents that parse into a machine violating
/// its invariants throw InvariantError. For "mcqfa", initial_state defaults
/// to 0 and accepting to {0} when absent.
Machine machine_from_json(const nlohmann::json& doc);

Machine parse_machine(const std::string& text);
Machine load_machine(const std::filesystem::path& path);
void save_machine(const Machine& machine, const std::filesystem::path& path);

}  // namespace qfa
