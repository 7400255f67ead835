#include "fsmlab/engine.hpp"

#include <charconv>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string_view>

namespace fsmlab {

std::size_t default_threshold() {
    if (const char* env = std::getenv("FSMLAB_THRESHOLD")) {
        std::string_view text(env);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) {
            return value;
        }
    }
    return kDefaultThreshold;
}

std::vector<Configuration> Trace::configurations() const {
    std::vector<Configuration> out;
    out.reserve(steps.size() + 1);
    out.push_back(initial);
    for (const auto& s : steps) {
        out.push_back(s.after);
    }
    return out;
}

const char* outcome_name(const Outcome& o) {
    if (std::holds_alternative<Accept>(o)) {
        return "accept";
    }
    if (std::holds_alternative<Reject>(o)) {
        return "reject";
    }
    return "unknown";
}

std::vector<std::size_t> Exploration::used_rules() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].any()) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

// Tree nodes keep only their incoming edge; configurations live in the
// frontier and are rebuilt by replay when a trace is needed.
struct Node {
    std::size_t parent;
    std::size_t rule;
};

Trace replay(const MachineDef& def, const Configuration& initial, const std::vector<Node>& nodes, std::size_t leaf) {
    std::vector<std::size_t> path;
    for (auto id = leaf; nodes[id].parent != kNoParent; id = nodes[id].parent) {
        path.push_back(nodes[id].rule);
    }
    Trace trace{initial, {}};
    Configuration cur = initial;
    std::size_t index = 1;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const auto& rule = def.rules[*it];
        auto next = apply_rule(cur, rule);
        trace.steps.push_back(Step{*it, rule, cur, next, index++});
        cur = std::move(next);
    }
    return trace;
}

}  // namespace

Exploration explore(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                    std::size_t threshold, ExploreOptions options) {
    if (threshold < 1) {
        throw InvalidInitial("threshold must be at least 1");
    }
    const Configuration initial = initial_configuration(def, tape0, head0);

    Exploration result;
    result.edges.resize(def.rules.size());
    result.threshold = threshold;

    struct Pending {
        Configuration cfg;
        std::size_t node;
        std::size_t depth;
    };

    std::vector<Node> nodes{{kNoParent, 0}};
    std::deque<Pending> frontier;
    frontier.push_back({initial, 0, 0});

    auto record_leaf = [&](std::size_t node) {
        if (!result.first_computation) {
            result.first_computation = replay(def, initial, nodes, node);
        }
    };

    while (!frontier.empty()) {
        Pending cur = std::move(frontier.front());
        frontier.pop_front();
        const auto incoming = nodes[cur.node].parent == kNoParent ? std::optional<std::size_t>{}
                                                                  : std::optional<std::size_t>{nodes[cur.node].rule};

        const auto enabled = applicable_rule_indices(def, cur.cfg);
        if (enabled.empty()) {
            ++result.halted_count;
            result.terminal_states.insert(cur.cfg.state);
            if (incoming) {
                result.edges[*incoming].used_as_last = true;
            }
            record_leaf(cur.node);
            if (cur.cfg.state == def.accept && !result.accepting_trace) {
                result.accepting_trace = replay(def, initial, nodes, cur.node);
                if (options.stop_at_accept) {
                    result.complete = frontier.empty();
                    break;
                }
            }
            continue;
        }
        if (cur.depth == threshold) {
            ++result.cutoff_count;
            result.cutoff_states.insert(cur.cfg.state);
            if (incoming) {
                result.edges[*incoming].used_as_cutoff = true;
            }
            record_leaf(cur.node);
            continue;
        }
        if (incoming) {
            result.edges[*incoming].used_as_mid = true;
        }
        for (auto r : enabled) {
            nodes.push_back({cur.node, r});
            frontier.push_back({apply_rule(cur.cfg, def.rules[r]), nodes.size() - 1, cur.depth + 1});
        }
    }
    return result;
}

Outcome outcome_of(const Exploration& e) {
    if (e.accepting_trace) {
        return Accept{*e.accepting_trace};
    }
    if (e.cutoff_count > 0) {
        return Unknown{e.cutoff_count};
    }
    return Reject{};
}

Outcome apply(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0, std::size_t threshold) {
    return outcome_of(explore(def, tape0, head0, threshold, {.stop_at_accept = true}));
}

std::optional<Trace> trace_accepting(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                                     std::size_t threshold) {
    return explore(def, tape0, head0, threshold, {.stop_at_accept = true}).accepting_trace;
}

}  // namespace fsmlab
