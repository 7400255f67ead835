#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fsmlab/engine.hpp"
#include "fsmlab/machine.hpp"

namespace fsmlab {

/// Reads a machine-file object. Structural problems (unknown or missing keys,
/// wrong JSON types) come back as Malformed diagnostics alongside whatever
/// validate_machine() reports for the parts that did parse.
ValidationResult machine_from_json(const nlohmann::json& j);
nlohmann::json machine_to_json(const MachineDef& def);

ValidationResult load_machine(const std::filesystem::path& path);

nlohmann::json rule_to_json(const TransitionRule& rule);
nlohmann::json configuration_to_json(const Configuration& cfg);
nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diags);

/// One object per configuration; entry 0 carries `"rule": null`.
nlohmann::json trace_to_json(const Trace& trace);

/// Textbook-style listing: the initial configuration, then one `⊢ (...)` line per step.
std::string format_trace(const Trace& trace);

std::vector<Symbol> split_word(const std::string& word);

}  // namespace fsmlab
