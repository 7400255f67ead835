#include "fsmlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fsmlab {

using nlohmann::json;

namespace {

const std::set<std::string> kMachineKeys{"name", "tapes", "states", "alphabet", "start", "finals", "accept", "rules"};
const std::set<std::string> kRuleKeys{"from", "read", "to", "actions"};

class Reader {
public:
    explicit Reader(std::vector<Diagnostic>& diags) : diags_(diags) {}

    void malformed(const std::string& locus, const std::string& message) {
        diags_.push_back({DiagnosticCode::Malformed, message, locus});
    }

    bool check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& locus) {
        bool ok = true;
        for (const auto& [key, _] : obj.items()) {
            if (!allowed.contains(key)) {
                malformed(locus.empty() ? key : locus + "." + key, "unknown key '" + key + "'");
                ok = false;
            }
        }
        for (const auto& key : allowed) {
            if (!obj.contains(key)) {
                malformed(locus.empty() ? key : locus + "." + key, "missing key '" + key + "'");
                ok = false;
            }
        }
        return ok;
    }

    std::string string_at(const json& obj, const std::string& key, const std::string& locus) {
        if (!obj.contains(key)) {
            return {};
        }
        const auto& v = obj.at(key);
        if (!v.is_string()) {
            malformed(locus, "expected a string");
            return {};
        }
        return v.get<std::string>();
    }

    std::vector<std::string> strings_at(const json& obj, const std::string& key, const std::string& locus) {
        std::vector<std::string> out;
        if (!obj.contains(key)) {
            return out;
        }
        const auto& v = obj.at(key);
        if (!v.is_array()) {
            malformed(locus, "expected an array of strings");
            return out;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string()) {
                malformed(locus + "[" + std::to_string(i) + "]", "expected a string");
                continue;
            }
            out.push_back(v[i].get<std::string>());
        }
        return out;
    }

private:
    std::vector<Diagnostic>& diags_;
};

}  // namespace

ValidationResult machine_from_json(const json& j) {
    std::vector<Diagnostic> diags;
    Reader in(diags);
    if (!j.is_object()) {
        in.malformed("", "a machine must be a JSON object");
        return {std::nullopt, std::move(diags)};
    }
    in.check_keys(j, kMachineKeys, "");

    RawMachine raw;
    raw.name = in.string_at(j, "name", "name");
    if (j.contains("tapes")) {
        if (j["tapes"].is_number_integer()) {
            raw.tapes = j["tapes"].get<long long>();
        } else {
            in.malformed("tapes", "expected an integer");
        }
    }
    raw.states = in.strings_at(j, "states", "states");
    raw.alphabet = in.strings_at(j, "alphabet", "alphabet");
    raw.start = in.string_at(j, "start", "start");
    raw.finals = in.strings_at(j, "finals", "finals");
    raw.accept = in.string_at(j, "accept", "accept");

    if (j.contains("rules")) {
        const auto& rules = j["rules"];
        if (!rules.is_array()) {
            in.malformed("rules", "expected an array of rule objects");
        } else {
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const auto locus = "rules[" + std::to_string(i) + "]";
                const auto& r = rules[i];
                if (!r.is_object()) {
                    in.malformed(locus, "expected a rule object");
                    continue;
                }
                in.check_keys(r, kRuleKeys, locus);
                raw.rules.push_back(RawRule{in.string_at(r, "from", locus + ".from"),
                                            in.strings_at(r, "read", locus + ".read"),
                                            in.string_at(r, "to", locus + ".to"),
                                            in.strings_at(r, "actions", locus + ".actions")});
            }
        }
    }

    auto result = validate_machine(raw);
    if (diags.empty()) {
        return result;
    }
    diags.insert(diags.end(), result.diagnostics.begin(), result.diagnostics.end());
    return {std::nullopt, std::move(diags)};
}

json machine_to_json(const MachineDef& def) {
    json rules = json::array();
    for (const auto& r : def.rules) {
        rules.push_back(rule_to_json(r));
    }
    json out = json::object();
    out["name"] = def.name;
    out["tapes"] = def.numtapes;
    out["states"] = def.states;
    out["alphabet"] = def.sigma;
    out["start"] = def.start;
    out["finals"] = def.finals;
    out["accept"] = def.accept;
    out["rules"] = std::move(rules);
    return out;
}

ValidationResult load_machine(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        return {std::nullopt, {{DiagnosticCode::Malformed, "cannot open " + path.string(), "file"}}};
    }
    json j;
    try {
        j = json::parse(file);
    } catch (const json::parse_error& e) {
        return {std::nullopt, {{DiagnosticCode::Malformed, e.what(), "file"}}};
    }
    return machine_from_json(j);
}

json rule_to_json(const TransitionRule& rule) {
    std::vector<std::string> actions;
    for (const auto& a : rule.actions) {
        actions.push_back(action_token(a));
    }
    return json{{"from", rule.from}, {"read", rule.reads}, {"to", rule.to}, {"actions", actions}};
}

json configuration_to_json(const Configuration& cfg) {
    json tapes = json::array();
    for (const auto& t : cfg.tapes) {
        tapes.push_back(t.cells);
    }
    return json{{"state", cfg.state}, {"heads", cfg.heads()}, {"tapes", tapes}};
}

json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
    json out = json::array();
    for (const auto& d : diags) {
        out.push_back(json{{"code", to_string(d.code)}, {"message", d.message}, {"locus", d.locus}});
    }
    return out;
}

json trace_to_json(const Trace& trace) {
    json out = json::array();
    auto first = configuration_to_json(trace.initial);
    first["rule"] = nullptr;
    out.push_back(std::move(first));
    for (const auto& step : trace.steps) {
        auto entry = configuration_to_json(step.after);
        entry["rule"] = rule_to_json(step.rule);
        out.push_back(std::move(entry));
    }
    return out;
}

std::string format_trace(const Trace& trace) {
    std::string out = to_string(trace.initial) + "\n";
    for (const auto& step : trace.steps) {
        out += "⊢ " + to_string(step.after) + "\n";
    }
    return out;
}

std::vector<Symbol> split_word(const std::string& word) {
    std::istringstream in(word);
    std::vector<Symbol> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

}  // namespace fsmlab
