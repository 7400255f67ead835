#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fsmlab {

using Symbol = std::string;
using StateName = std::string;

inline constexpr const char* kBlank = "_";
inline constexpr const char* kLeftEnd = "@";

bool is_reserved_symbol(const Symbol& s);

// A head action is one of: move left, move right, or overwrite the cell.
struct MoveLeft {
    bool operator==(const MoveLeft&) const = default;
};
struct MoveRight {
    bool operator==(const MoveRight&) const = default;
};
struct Write {
    Symbol symbol;
    bool operator==(const Write&) const = default;
};
using HeadAction = std::variant<MoveLeft, MoveRight, Write>;

/// Token used in machine files and listings: "L", "R", or the written symbol.
std::string action_token(const HeadAction& action);
HeadAction action_from_token(const std::string& token);

struct TransitionRule {
    StateName from;
    std::vector<Symbol> reads;
    StateName to;
    std::vector<HeadAction> actions;

    bool operator==(const TransitionRule&) const = default;
};

/// `((C (a _ _ _)) (D (a a _ _)))`
std::string to_string(const TransitionRule& rule);

/// A validated multitape machine. Construct through validate_machine().
struct MachineDef {
    std::string name;
    std::vector<StateName> states;
    std::vector<Symbol> sigma;
    StateName start;
    std::vector<StateName> finals;
    StateName accept;
    std::vector<TransitionRule> rules;
    std::size_t numtapes = 1;

    bool operator==(const MachineDef&) const = default;

    bool is_final(const StateName& s) const;
    bool has_state(const StateName& s) const;
};

struct Tape {
    std::vector<Symbol> cells{kBlank};
    std::size_t head = 0;

    const Symbol& read() const { return cells[head]; }
    bool operator==(const Tape&) const = default;
};

struct Configuration {
    StateName state;
    std::vector<Tape> tapes;

    std::vector<std::size_t> heads() const;
    bool operator==(const Configuration&) const = default;
};

/// `(C (2 1 1 1) ((@ _ a b) (_ _) (_ _) (_ _)))`
std::string to_string(const Configuration& cfg);

enum class DiagnosticCode {
    BadStart,
    BadFinals,
    BadAccept,
    BadArity,
    UnknownState,
    UnknownSymbol,
    BadTapeCount,
    WriteLeftEnd,
    DuplicateState,
    DuplicateRule,
    BadSymbol,
    Malformed,
};

std::string to_string(DiagnosticCode code);

struct Diagnostic {
    DiagnosticCode code;
    std::string message;
    std::string locus;  // e.g. "start", "rules[3].read"

    bool operator==(const Diagnostic&) const = default;
};

std::string to_string(const Diagnostic& d);

/// Machine description as it arrives from a file or request, before any
/// invariant has been checked.
struct RawRule {
    std::string from;
    std::vector<std::string> read;
    std::string to;
    std::vector<std::string> actions;
};

struct RawMachine {
    std::string name;
    long long tapes = 1;
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::string start;
    std::vector<std::string> finals;
    std::string accept;
    std::vector<RawRule> rules;
};

struct ValidationResult {
    std::optional<MachineDef> machine;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return machine.has_value(); }
};

/// Checks every machine invariant in one pass. Exactly one of `machine` and
/// `diagnostics` is populated.
ValidationResult validate_machine(const RawMachine& raw);

RawMachine to_raw(const MachineDef& def);

class LeftEdgeViolation : public std::logic_error {
public:
    explicit LeftEdgeViolation(std::size_t tape)
        : std::logic_error("head on tape " + std::to_string(tape) + " cannot move left of position 0") {}
};

class InvalidInitial : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<Symbol> read_symbols(const Configuration& cfg);

/// Rules of `def` enabled in `cfg`, in definition order. Final states enable
/// nothing, and a rule moving a head left from position 0 is never enabled.
std::vector<std::size_t> applicable_rule_indices(const MachineDef& def, const Configuration& cfg);
std::vector<TransitionRule> applicable_rules(const MachineDef& def, const Configuration& cfg);

Configuration apply_rule(const Configuration& cfg, const TransitionRule& rule);

/// Tape 0 holds `tape0` with its head at `head0`; every other tape is a single
/// blank with the head on it.
Configuration initial_configuration(const MachineDef& def, std::vector<Symbol> tape0, std::size_t head0);

}  // namespace fsmlab
