#include "fsmlab/compgraph.hpp"

#include <stdexcept>

#include "fsmlab/dot.hpp"

namespace fsmlab {

std::string to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::R: return "r";
        case EdgeClass::SP: return "sp";
        case EdgeClass::CO: return "co";
        case EdgeClass::COSP: return "cosp";
    }
    return "?";
}

EdgeClass classify_edge(const EdgeFlags& flags) {
    if (flags.used_as_cutoff && flags.used_as_last) {
        return EdgeClass::COSP;
    }
    if (flags.used_as_cutoff) {
        return EdgeClass::CO;
    }
    if (flags.used_as_last) {
        return EdgeClass::SP;
    }
    return EdgeClass::R;
}

std::string outcome_message(GraphOutcome outcome, std::size_t threshold) {
    switch (outcome) {
        case GraphOutcome::Accept: return "Word accepted.";
        case GraphOutcome::Reject: return "Word rejected.";
        case GraphOutcome::Unknown:
            return "No accepting computation found; computations cut off at " + std::to_string(threshold) + " steps.";
    }
    return {};
}

CmpGraph cmpgraph_from_exploration(const MachineDef& def, const Exploration& exploration) {
    CmpGraph g;
    g.machine = &def;
    g.threshold = exploration.threshold;

    if (exploration.accepting_trace) {
        const auto& trace = *exploration.accepting_trace;
        g.outcome = GraphOutcome::Accept;
        g.accepting_trace = trace;
        g.nodes.insert(trace.initial.state);
        std::map<std::size_t, EdgeFlags> flags;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& step = trace.steps[i];
            g.nodes.insert(step.after.state);
            auto& f = flags[step.rule_index];
            (i + 1 == trace.steps.size() ? f.used_as_last : f.used_as_mid) = true;
        }
        for (const auto& [rule, f] : flags) {
            g.edges.emplace(rule, classify_edge(f));
        }
        g.crimson.insert(def.accept);
    } else {
        if (!exploration.complete) {
            throw std::logic_error("computation graph needs a complete exploration");
        }
        g.nodes.insert(def.start);
        for (std::size_t r = 0; r < exploration.edges.size(); ++r) {
            if (!exploration.edges[r].any()) {
                continue;
            }
            g.edges.emplace(r, classify_edge(exploration.edges[r]));
            g.nodes.insert(def.rules[r].from);
            g.nodes.insert(def.rules[r].to);
        }
        g.crimson = exploration.terminal_states;
        g.gold = exploration.cutoff_states;
        g.outcome = g.gold.empty() ? GraphOutcome::Reject : GraphOutcome::Unknown;
    }
    g.message = outcome_message(g.outcome, g.threshold);
    return g;
}

CmpGraph build_cmpgraph(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                        std::size_t threshold) {
    return cmpgraph_from_exploration(def, explore(def, tape0, head0, threshold, {.stop_at_accept = true}));
}

std::string render_cmpgraph(const CmpGraph& g) {
    const auto& def = *g.machine;
    dot::GraphSpec spec;
    spec.message = g.message;
    spec.styles.resize(def.states.size());
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        const auto& s = def.states[i];
        spec.keep_state.push_back(g.nodes.contains(s));
        spec.styles[i] = {s == def.start, g.crimson.contains(s), g.gold.contains(s)};
    }
    for (const auto& [rule, _] : g.edges) {
        spec.rules.push_back(rule);
    }
    return dot::render(def, spec);
}

}  // namespace fsmlab
