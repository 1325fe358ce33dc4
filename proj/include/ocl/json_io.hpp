#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ocl/automata.hpp"

namespace ocl {

// On-disk schema, shared by files and the teacher wire protocol:
//   {"type":"doca"|"mdoca"|"dfa", "m":int (mdoca only), "alphabet":[...],
//    "states":[...], "initial":str, "finals":[...],
//    "transitions":[{"from":str, "test":"zero"|"pos"|int, "symbol":str,
//                    "to":str, "effect":int|"reset"}]}
// DFA transitions omit "test" and "effect".

nlohmann::json machine_to_json(const Doca& machine);
nlohmann::json machine_to_json(const MDoca& machine);
nlohmann::json machine_to_json(const Dfa& dfa);

Doca doca_from_json(const nlohmann::json& j);
MDoca mdoca_from_json(const nlohmann::json& j);
Dfa dfa_from_json(const nlohmann::json& j);

using AnyMachine = std::variant<Doca, MDoca, Dfa>;

// Dispatches on "type". Throws std::invalid_argument on schema errors.
AnyMachine machine_from_json(const nlohmann::json& j);

struct LoadedMachine {
  AnyMachine machine;
  int completed_entries = 0;  // transitions routed to the generated sink
};

// Reads a machine from a file. Incomplete transition tables are completed with
// a fresh non-final sink; the count is reported so callers can warn.
LoadedMachine load_machine_file(const std::string& path);

// Everything as a DOCA: mdoca converted, dfa wrapped.
Doca as_doca(const AnyMachine& machine);

void save_machine_file(const std::string& path, const nlohmann::json& j);

}  // namespace ocl
