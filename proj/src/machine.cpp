#include "fsmlab/machine.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace fsmlab {

namespace {

bool is_valid_token(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += parts[i];
    }
    return out;
}

}  // namespace

bool is_reserved_symbol(const Symbol& s) {
    return s == kBlank || s == kLeftEnd;
}

std::string action_token(const HeadAction& action) {
    if (std::holds_alternative<MoveLeft>(action)) {
        return "L";
    }
    if (std::holds_alternative<MoveRight>(action)) {
        return "R";
    }
    return std::get<Write>(action).symbol;
}

HeadAction action_from_token(const std::string& token) {
    if (token == "L") {
        return MoveLeft{};
    }
    if (token == "R") {
        return MoveRight{};
    }
    return Write{token};
}

std::string to_string(const TransitionRule& rule) {
    std::vector<std::string> actions;
    actions.reserve(rule.actions.size());
    for (const auto& a : rule.actions) {
        actions.push_back(action_token(a));
    }
    return "((" + rule.from + " (" + join(rule.reads) + ")) (" + rule.to + " (" + join(actions) + ")))";
}

bool MachineDef::is_final(const StateName& s) const {
    return contains(finals, s);
}

bool MachineDef::has_state(const StateName& s) const {
    return contains(states, s);
}

std::vector<std::size_t> Configuration::heads() const {
    std::vector<std::size_t> out;
    out.reserve(tapes.size());
    for (const auto& t : tapes) {
        out.push_back(t.head);
    }
    return out;
}

std::string to_string(const Configuration& cfg) {
    std::ostringstream os;
    os << '(' << cfg.state << " (";
    for (std::size_t i = 0; i < cfg.tapes.size(); ++i) {
        os << (i > 0 ? " " : "") << cfg.tapes[i].head;
    }
    os << ") (";
    for (std::size_t i = 0; i < cfg.tapes.size(); ++i) {
        os << (i > 0 ? " (" : "(") << join(cfg.tapes[i].cells) << ')';
    }
    os << "))";
    return os.str();
}

std::string to_string(DiagnosticCode code) {
    switch (code) {
        case DiagnosticCode::BadStart: return "BadStart";
        case DiagnosticCode::BadFinals: return "BadFinals";
        case DiagnosticCode::BadAccept: return "BadAccept";
        case DiagnosticCode::BadArity: return "BadArity";
        case DiagnosticCode::UnknownState: return "UnknownState";
        case DiagnosticCode::UnknownSymbol: return "UnknownSymbol";
        case DiagnosticCode::BadTapeCount: return "BadTapeCount";
        case DiagnosticCode::WriteLeftEnd: return "WriteLeftEnd";
        case DiagnosticCode::DuplicateState: return "DuplicateState";
        case DiagnosticCode::DuplicateRule: return "DuplicateRule";
        case DiagnosticCode::BadSymbol: return "BadSymbol";
        case DiagnosticCode::Malformed: return "Malformed";
    }
    return "Unknown";
}

std::string to_string(const Diagnostic& d) {
    return to_string(d.code) + " at " + d.locus + ": " + d.message;
}

ValidationResult validate_machine(const RawMachine& raw) {
    std::vector<Diagnostic> diags;
    auto report = [&diags](DiagnosticCode code, std::string locus, std::string message) {
        diags.push_back({code, std::move(message), std::move(locus)});
    };

    if (raw.tapes < 1) {
        report(DiagnosticCode::BadTapeCount, "tapes",
               "a machine needs at least one tape, got " + std::to_string(raw.tapes));
    }
    const auto n = raw.tapes < 1 ? std::size_t{0} : static_cast<std::size_t>(raw.tapes);

    std::set<std::string> seen_states;
    for (std::size_t i = 0; i < raw.states.size(); ++i) {
        const auto& s = raw.states[i];
        const auto locus = "states[" + std::to_string(i) + "]";
        if (!is_valid_token(s)) {
            report(DiagnosticCode::BadSymbol, locus, "state name '" + s + "' is empty or contains whitespace");
        }
        if (!seen_states.insert(s).second) {
            report(DiagnosticCode::DuplicateState, locus, "state '" + s + "' is declared more than once");
        }
    }

    std::set<std::string> seen_symbols;
    for (std::size_t i = 0; i < raw.alphabet.size(); ++i) {
        const auto& a = raw.alphabet[i];
        const auto locus = "alphabet[" + std::to_string(i) + "]";
        if (!is_valid_token(a)) {
            report(DiagnosticCode::BadSymbol, locus, "symbol '" + a + "' is empty or contains whitespace");
        } else if (is_reserved_symbol(a)) {
            report(DiagnosticCode::BadSymbol, locus, "'" + a + "' is reserved and cannot be in the input alphabet");
        } else if (a == "L" || a == "R") {
            report(DiagnosticCode::BadSymbol, locus, "'" + a + "' is a head movement and cannot be an alphabet symbol");
        }
        if (!seen_symbols.insert(a).second) {
            report(DiagnosticCode::BadSymbol, locus, "symbol '" + a + "' is declared more than once");
        }
    }

    if (!seen_states.contains(raw.start)) {
        report(DiagnosticCode::BadStart, "start", "start state '" + raw.start + "' is not a declared state");
    }
    for (std::size_t i = 0; i < raw.finals.size(); ++i) {
        if (!seen_states.contains(raw.finals[i])) {
            report(DiagnosticCode::BadFinals, "finals[" + std::to_string(i) + "]",
                   "final state '" + raw.finals[i] + "' is not a declared state");
        }
    }
    if (!contains(raw.finals, raw.accept)) {
        report(DiagnosticCode::BadAccept, "accept", "accept state '" + raw.accept + "' is not a final state");
    }

    auto readable = [&](const std::string& sym) { return is_reserved_symbol(sym) || seen_symbols.contains(sym); };

    std::set<std::tuple<std::string, std::vector<std::string>, std::string, std::vector<std::string>>> seen_rules;
    for (std::size_t r = 0; r < raw.rules.size(); ++r) {
        const auto& rule = raw.rules[r];
        const auto locus = "rules[" + std::to_string(r) + "]";
        if (!seen_states.contains(rule.from)) {
            report(DiagnosticCode::UnknownState, locus + ".from", "state '" + rule.from + "' is not declared");
        }
        if (!seen_states.contains(rule.to)) {
            report(DiagnosticCode::UnknownState, locus + ".to", "state '" + rule.to + "' is not declared");
        }
        if (n > 0 && rule.read.size() != n) {
            report(DiagnosticCode::BadArity, locus + ".read",
                   "expected " + std::to_string(n) + " read symbols, got " + std::to_string(rule.read.size()));
        }
        if (n > 0 && rule.actions.size() != n) {
            report(DiagnosticCode::BadArity, locus + ".actions",
                   "expected " + std::to_string(n) + " actions, got " + std::to_string(rule.actions.size()));
        }
        for (std::size_t i = 0; i < rule.read.size(); ++i) {
            if (!readable(rule.read[i])) {
                report(DiagnosticCode::UnknownSymbol, locus + ".read[" + std::to_string(i) + "]",
                       "'" + rule.read[i] + "' is not in the alphabet");
            }
        }
        for (std::size_t i = 0; i < rule.actions.size(); ++i) {
            const auto& a = rule.actions[i];
            const auto alocus = locus + ".actions[" + std::to_string(i) + "]";
            if (a == "L" || a == "R") {
                continue;
            }
            if (a == kLeftEnd) {
                report(DiagnosticCode::WriteLeftEnd, alocus, "the left-end marker '@' cannot be written");
            } else if (!readable(a)) {
                report(DiagnosticCode::UnknownSymbol, alocus, "'" + a + "' is not in the alphabet");
            }
        }
        if (!seen_rules.emplace(rule.from, rule.read, rule.to, rule.actions).second) {
            report(DiagnosticCode::DuplicateRule, locus, "rule " + std::to_string(r) + " repeats an earlier rule");
        }
    }

    if (!diags.empty()) {
        return {std::nullopt, std::move(diags)};
    }

    MachineDef def;
    def.name = raw.name;
    def.states = raw.states;
    def.sigma = raw.alphabet;
    def.start = raw.start;
    def.finals = raw.finals;
    def.accept = raw.accept;
    def.numtapes = n;
    def.rules.reserve(raw.rules.size());
    for (const auto& rule : raw.rules) {
        TransitionRule tr{rule.from, rule.read, rule.to, {}};
        for (const auto& a : rule.actions) {
            tr.actions.push_back(action_from_token(a));
        }
        def.rules.push_back(std::move(tr));
    }
    return {std::move(def), {}};
}

RawMachine to_raw(const MachineDef& def) {
    RawMachine raw;
    raw.name = def.name;
    raw.tapes = static_cast<long long>(def.numtapes);
    raw.states = def.states;
    raw.alphabet = def.sigma;
    raw.start = def.start;
    raw.finals = def.finals;
    raw.accept = def.accept;
    for (const auto& rule : def.rules) {
        RawRule rr{rule.from, rule.reads, rule.to, {}};
        for (const auto& a : rule.actions) {
            rr.actions.push_back(action_token(a));
        }
        raw.rules.push_back(std::move(rr));
    }
    return raw;
}

std::vector<Symbol> read_symbols(const Configuration& cfg) {
    std::vector<Symbol> out;
    out.reserve(cfg.tapes.size());
    for (const auto& t : cfg.tapes) {
        out.push_back(t.read());
    }
    return out;
}

namespace {

bool enabled(const TransitionRule& rule, const Configuration& cfg) {
    if (rule.from != cfg.state) {
        return false;
    }
    for (std::size_t i = 0; i < cfg.tapes.size(); ++i) {
        const auto& tape = cfg.tapes[i];
        if (rule.reads[i] != tape.read()) {
            return false;
        }
        if (tape.head == 0 && std::holds_alternative<MoveLeft>(rule.actions[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::size_t> applicable_rule_indices(const MachineDef& def, const Configuration& cfg) {
    std::vector<std::size_t> out;
    if (def.is_final(cfg.state)) {
        return out;
    }
    for (std::size_t i = 0; i < def.rules.size(); ++i) {
        if (enabled(def.rules[i], cfg)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<TransitionRule> applicable_rules(const MachineDef& def, const Configuration& cfg) {
    std::vector<TransitionRule> out;
    for (auto i : applicable_rule_indices(def, cfg)) {
        out.push_back(def.rules[i]);
    }
    return out;
}

Configuration apply_rule(const Configuration& cfg, const TransitionRule& rule) {
    Configuration next{rule.to, cfg.tapes};
    for (std::size_t i = 0; i < next.tapes.size(); ++i) {
        auto& tape = next.tapes[i];
        std::visit(
            [&](const auto& action) {
                using A = std::decay_t<decltype(action)>;
                if constexpr (std::is_same_v<A, MoveLeft>) {
                    if (tape.head == 0) {
                        throw LeftEdgeViolation(i);
                    }
                    --tape.head;
                } else if constexpr (std::is_same_v<A, MoveRight>) {
                    ++tape.head;
                    if (tape.head == tape.cells.size()) {
                        tape.cells.emplace_back(kBlank);
                    }
                } else {
                    tape.cells[tape.head] = action.symbol;
                }
            },
            rule.actions[i]);
    }
    return next;
}

Configuration initial_configuration(const MachineDef& def, std::vector<Symbol> tape0, std::size_t head0) {
    if (tape0.empty()) {
        throw InvalidInitial("tape 0 must contain at least one cell");
    }
    if (head0 >= tape0.size()) {
        throw InvalidInitial("head position " + std::to_string(head0) + " is outside tape 0 (length " +
                             std::to_string(tape0.size()) + ")");
    }
    for (std::size_t i = 0; i < tape0.size(); ++i) {
        if (!is_reserved_symbol(tape0[i]) && !contains(def.sigma, tape0[i])) {
            throw InvalidInitial("tape 0 cell " + std::to_string(i) + " holds '" + tape0[i] +
                                 "', which is not in the alphabet");
        }
    }
    Configuration cfg{def.start, std::vector<Tape>(def.numtapes)};
    cfg.tapes[0] = Tape{std::move(tape0), head0};
    return cfg;
}

}  // namespace fsmlab
