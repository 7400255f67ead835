#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "fsmlab/machine.hpp"

namespace fsmlab {

inline constexpr std::size_t kDefaultThreshold = 1000;

/// Default step threshold, overridden by FSMLAB_THRESHOLD when it holds a
/// positive integer.
std::size_t default_threshold();

struct Step {
    std::size_t rule_index = 0;
    TransitionRule rule;
    Configuration before;
    Configuration after;
    std::size_t index = 0;  // 1-based position within the computation
};

struct Trace {
    Configuration initial;
    std::vector<Step> steps;

    const Configuration& last() const { return steps.empty() ? initial : steps.back().after; }
    /// initial, then every step's `after`.
    std::vector<Configuration> configurations() const;
};

struct Accept {
    Trace trace;
};
struct Reject {};
struct Unknown {
    std::size_t cutoff_count = 0;
};
using Outcome = std::variant<Accept, Reject, Unknown>;

const char* outcome_name(const Outcome& o);  // "accept" | "reject" | "unknown"

struct EdgeFlags {
    bool used_as_last = false;
    bool used_as_mid = false;
    bool used_as_cutoff = false;

    bool any() const { return used_as_last || used_as_mid || used_as_cutoff; }
    bool operator==(const EdgeFlags&) const = default;
};

/// Summary of a threshold-bounded computation tree.
struct Exploration {
    std::vector<EdgeFlags> edges;  // indexed like MachineDef::rules
    std::set<StateName> terminal_states;
    std::set<StateName> cutoff_states;
    std::optional<Trace> accepting_trace;
    /// First leaf in BFS order: the shortest halted or cut-off computation.
    std::optional<Trace> first_computation;
    std::size_t halted_count = 0;
    std::size_t cutoff_count = 0;
    std::size_t threshold = 0;
    /// False when the search stopped at the first accepting computation.
    bool complete = true;

    std::vector<std::size_t> used_rules() const;
};

struct ExploreOptions {
    bool stop_at_accept = false;
};

/// Breadth-first expansion of every computation from the initial configuration,
/// rules tried in definition order. A computation halts on a final state or
/// when no rule applies; one that has taken `threshold` steps without halting
/// is cut off. Halting is checked first.
Exploration explore(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                    std::size_t threshold, ExploreOptions options = {});

Outcome apply(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0, std::size_t threshold);

std::optional<Trace> trace_accepting(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                                     std::size_t threshold);

Outcome outcome_of(const Exploration& e);

}  // namespace fsmlab
