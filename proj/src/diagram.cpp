#include "fsmlab/diagram.hpp"

#include <algorithm>
#include <map>

#include "fsmlab/dot.hpp"

namespace fsmlab {

StateVariety state_variety(const MachineDef& def, const StateName& state) {
    if (state == def.accept) {
        return StateVariety::AcceptingFinal;
    }
    if (def.is_final(state)) {
        return StateVariety::RejectingFinal;
    }
    return StateVariety::Ordinary;
}

std::vector<DiagramEdge> diagram_edges(const MachineDef& def, const std::vector<std::size_t>& rules) {
    std::vector<DiagramEdge> out;
    std::map<std::pair<StateName, StateName>, std::size_t> slot;
    for (auto r : rules) {
        const auto& rule = def.rules.at(r);
        auto [it, fresh] = slot.try_emplace({rule.from, rule.to}, out.size());
        if (fresh) {
            out.push_back({rule.from, rule.to, {}});
        }
        out[it->second].entries.push_back(rule);
    }
    return out;
}

std::string render_transition_diagram(const MachineDef& def) {
    dot::GraphSpec spec;
    spec.keep_state.assign(def.states.size(), true);
    spec.styles.resize(def.states.size());
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        spec.styles[i].start = def.states[i] == def.start;
    }
    for (std::size_t r = 0; r < def.rules.size(); ++r) {
        spec.rules.push_back(r);
    }
    return dot::render(def, spec);
}

std::string render_subdiagram(const MachineDef& def, const std::set<StateName>& keep_states,
                              const std::vector<std::size_t>& keep_rules,
                              const std::optional<StateName>& highlight_start) {
    for (const auto& s : keep_states) {
        if (!def.has_state(s)) {
            throw SubsetViolation("state '" + s + "' is not a state of the machine");
        }
    }
    if (highlight_start && !keep_states.contains(*highlight_start)) {
        throw SubsetViolation("highlighted start '" + *highlight_start + "' is not among the kept states");
    }
    auto rules = keep_rules;
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    for (auto r : rules) {
        if (r >= def.rules.size()) {
            throw SubsetViolation("rule index " + std::to_string(r) + " is out of range");
        }
        const auto& rule = def.rules[r];
        if (!keep_states.contains(rule.from) || !keep_states.contains(rule.to)) {
            throw SubsetViolation("rule " + to_string(rule) + " references a state that is not kept");
        }
    }

    dot::GraphSpec spec;
    spec.rules = std::move(rules);
    spec.styles.resize(def.states.size());
    for (const auto& s : def.states) {
        spec.keep_state.push_back(keep_states.contains(s));
    }
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        spec.styles[i].start = highlight_start && def.states[i] == *highlight_start;
    }
    return dot::render(def, spec);
}

std::string render_subdiagram(const MachineDef& def, const std::set<StateName>& keep_states,
                              const std::function<bool(const TransitionRule&)>& keep_rule,
                              const std::optional<StateName>& highlight_start) {
    std::vector<std::size_t> rules;
    for (std::size_t r = 0; r < def.rules.size(); ++r) {
        if (keep_rule(def.rules[r])) {
            rules.push_back(r);
        }
    }
    return render_subdiagram(def, keep_states, rules, highlight_start);
}

}  // namespace fsmlab
