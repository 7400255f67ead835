#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsmlab/engine.hpp"
#include "fsmlab/machine.hpp"

namespace fsmlab {

enum class Verdict { Holds, Fails, Unavailable };

std::string to_string(Verdict v);

/// Evaluates state invariants over whole computations. Implementations return
/// one verdict per configuration and degrade to Unavailable instead of throwing.
class InvariantOracle {
public:
    virtual ~InvariantOracle() = default;
    virtual std::vector<Verdict> evaluate(std::span<const Configuration> configurations) const = 0;
};

/// Wraps an in-process predicate. A predicate that throws yields Unavailable
/// for that configuration.
class PredicateOracle final : public InvariantOracle {
public:
    using Predicate = std::function<bool(const Configuration&)>;

    explicit PredicateOracle(Predicate predicate) : predicate_(std::move(predicate)) {}
    std::vector<Verdict> evaluate(std::span<const Configuration> configurations) const override;

private:
    Predicate predicate_;
};

/// Runs `/bin/sh -c command` once per evaluation. The child reads one JSON
/// object per line on stdin,
///   {"state": str, "tapes": [{"head": int, "cells": [str]}]}
/// and answers with one `{"holds": bool}` line per input line. A failed
/// launch, non-zero exit, or short/garbled answer makes every verdict Unavailable.
class ExternalOracle final : public InvariantOracle {
public:
    explicit ExternalOracle(std::string command) : command_(std::move(command)) {}
    std::vector<Verdict> evaluate(std::span<const Configuration> configurations) const override;

    static nlohmann::json request_line(const Configuration& cfg);

private:
    std::string command_;
};

enum class Direction { Forward, Backward };

struct StepView {
    std::size_t step = 0;
    std::size_t total_steps = 0;
    std::optional<StateName> prev_state;
    StateName curr_state;
    std::optional<TransitionRule> last_rule;
    std::vector<Tape> tapes;
    Verdict invariant = Verdict::Unavailable;
    bool at_boundary = false;  // the step request was clamped

    bool operator==(const StepView&) const = default;
};

nlohmann::json view_to_json(const StepView& view);

/// A cursor over one computation of a machine on a word: the accepting
/// computation when there is one, otherwise the first computation to halt or
/// be cut off.
class Session {
public:
    Session(std::string id, MachineDef machine, Trace trace, Outcome outcome, std::vector<Verdict> verdicts);

    const std::string& id() const { return id_; }
    const MachineDef& machine() const { return machine_; }
    const Trace& trace() const { return trace_; }
    const Outcome& outcome() const { return outcome_; }
    std::size_t cursor() const { return cursor_; }
    std::size_t steps() const { return trace_.steps.size(); }

    StepView view() const;
    StepView step(Direction direction);

private:
    StepView view_at(std::size_t cursor, bool at_boundary) const;

    std::string id_;
    MachineDef machine_;
    Trace trace_;
    Outcome outcome_;
    std::vector<Verdict> verdicts_;
    std::size_t cursor_ = 0;
};

Session create_session(std::string id, const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                       std::size_t threshold, const InvariantOracle* oracle = nullptr);

}  // namespace fsmlab
