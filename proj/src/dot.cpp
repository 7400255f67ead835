#include "fsmlab/dot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fsmlab::dot {

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

namespace {

bool is_keyword(std::string id) {
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
    return id == "node" || id == "edge" || id == "graph" || id == "digraph" || id == "subgraph" || id == "strict";
}

std::string sanitize(const std::string& name) {
    std::string id;
    for (unsigned char c : name) {
        id += (std::isalnum(c) != 0 || c == '_') ? static_cast<char>(c) : '_';
    }
    if (id.empty() || std::isdigit(static_cast<unsigned char>(id.front())) != 0) {
        id = "s_" + id;
    }
    if (is_keyword(id)) {
        id += '_';
    }
    return id;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i > 0 ? " " : "") + parts[i];
    }
    return out;
}

}  // namespace

std::vector<std::string> node_ids(const MachineDef& def) {
    std::vector<std::string> ids;
    std::set<std::string> taken;
    // Names that are already clean claim their id first, so "q-1" cannot take "q_1" from a state actually named q_1.
    std::vector<bool> clean(def.states.size());
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        clean[i] = sanitize(def.states[i]) == def.states[i];
        if (clean[i]) {
            taken.insert(def.states[i]);
        }
    }
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        if (clean[i]) {
            ids.push_back(def.states[i]);
            continue;
        }
        const auto base = sanitize(def.states[i]);
        auto id = base;
        for (int suffix = 2; taken.contains(id); ++suffix) {
            id = base + "_" + std::to_string(suffix);
        }
        taken.insert(id);
        ids.push_back(id);
    }
    return ids;
}

std::string label_entry(const TransitionRule& rule) {
    std::vector<std::string> actions;
    actions.reserve(rule.actions.size());
    for (const auto& a : rule.actions) {
        actions.push_back(action_token(a));
    }
    return "[(" + join(rule.reads) + ") (" + join(actions) + ")]";
}

std::string stacked_label(const std::vector<std::string>& entries) {
    const std::string sep = entries.size() >= 3 ? ",\\n" : ", ";
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += (i > 0 ? sep : "") + escape(entries[i]);
    }
    return out;
}

std::string render(const MachineDef& def, const GraphSpec& spec) {
    const auto ids = node_ids(def);
    std::map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < def.states.size(); ++i) {
        index_of.emplace(def.states[i], i);
    }

    std::ostringstream os;
    os << "digraph \"" << escape(def.name) << "\" {\n";
    os << "  rankdir=LR;\n";
    if (spec.message) {
        os << "  label=\"" << escape(*spec.message) << "\";\n";
        os << "  labelloc=b;\n";
    }
    os << "  edge [color=black, style=solid];\n";

    for (std::size_t i = 0; i < def.states.size(); ++i) {
        if (!spec.keep_state[i]) {
            continue;
        }
        const auto& state = def.states[i];
        const auto& style = spec.styles[i];
        const char* shape = "circle";
        if (state == def.accept) {
            shape = "doubleoctagon";
        } else if (def.is_final(state)) {
            shape = "doublecircle";
        }
        os << "  " << ids[i] << " [label=\"" << escape(state) << "\", shape=" << shape;
        if (style.gold) {
            os << ", style=filled, fillcolor=gold";
        } else if (style.start) {
            os << ", style=filled, fillcolor=green";
        }
        if (style.crimson) {
            os << ", color=crimson, penwidth=3";
        }
        os << "];\n";
    }

    // One drawn edge per (from, to) pair, in order of first use.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> entries;
    for (auto r : spec.rules) {
        const auto& rule = def.rules[r];
        const std::pair key{index_of.at(rule.from), index_of.at(rule.to)};
        auto [it, fresh] = entries.try_emplace(key);
        if (fresh) {
            pairs.push_back(key);
        }
        it->second.push_back(label_entry(rule));
    }
    for (const auto& key : pairs) {
        os << "  " << ids[key.first] << " -> " << ids[key.second] << " [label=\"" << stacked_label(entries[key])
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace fsmlab::dot
