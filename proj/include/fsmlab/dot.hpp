#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsmlab/machine.hpp"

namespace fsmlab::dot {

/// Escapes `"` and `\` for use inside a double-quoted DOT string.
std::string escape(const std::string& text);

/// DOT identifiers for every state of `def`, indexed like `def.states`.
/// Names are reduced to [A-Za-z0-9_], never start with a digit, avoid DOT
/// keywords, and collisions get a numeric suffix.
std::vector<std::string> node_ids(const MachineDef& def);

struct NodeStyle {
    bool start = false;    // green fill
    bool crimson = false;  // crimson outline
    bool gold = false;     // gold fill, wins over green
};

struct GraphSpec {
    std::vector<bool> keep_state;   // indexed like def.states
    std::vector<std::size_t> rules; // indices into def.rules, ascending
    std::vector<NodeStyle> styles;  // indexed like def.states
    std::optional<std::string> message;
};

/// `[(r0 ... rn-1) (a0 ... an-1)]`
std::string label_entry(const TransitionRule& rule);

/// Entries joined by ", ", or stacked one per line once there are three or more.
std::string stacked_label(const std::vector<std::string>& entries);

std::string render(const MachineDef& def, const GraphSpec& spec);

}  // namespace fsmlab::dot
