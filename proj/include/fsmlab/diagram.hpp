#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsmlab/machine.hpp"

namespace fsmlab {

enum class StateVariety { Ordinary, AcceptingFinal, RejectingFinal };

/// Variety of `state` ignoring start-ness, which renders independently.
StateVariety state_variety(const MachineDef& def, const StateName& state);

struct DiagramEdge {
    StateName from;
    StateName to;
    std::vector<TransitionRule> entries;  // definition order
};

/// Rules grouped into drawn edges, one per (from, to) pair in order of first occurrence.
std::vector<DiagramEdge> diagram_edges(const MachineDef& def, const std::vector<std::size_t>& rules);

class SubsetViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Full transition diagram as DOT: start filled green, the accepting state a
/// double octagon, other finals double circles, everything else a circle.
std::string render_transition_diagram(const MachineDef& def);

/// Phase diagram restricted to `keep_states` and `keep_rules` (indices into
/// def.rules). Only `highlight_start` is filled green.
std::string render_subdiagram(const MachineDef& def, const std::set<StateName>& keep_states,
                              const std::vector<std::size_t>& keep_rules,
                              const std::optional<StateName>& highlight_start);

std::string render_subdiagram(const MachineDef& def, const std::set<StateName>& keep_states,
                              const std::function<bool(const TransitionRule&)>& keep_rule,
                              const std::optional<StateName>& highlight_start);

}  // namespace fsmlab
