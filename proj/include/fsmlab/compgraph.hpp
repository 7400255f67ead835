#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fsmlab/engine.hpp"
#include "fsmlab/machine.hpp"

namespace fsmlab {

/// R: mid-computation step. SP: last step of a halting computation.
/// CO: step at which a computation was cut off. COSP: SP in one computation
/// and CO in another.
enum class EdgeClass { R, SP, CO, COSP };

std::string to_string(EdgeClass c);

EdgeClass classify_edge(const EdgeFlags& flags);

enum class GraphOutcome { Accept, Reject, Unknown };

struct CmpGraph {
    const MachineDef* machine = nullptr;
    std::set<StateName> nodes;
    std::map<std::size_t, EdgeClass> edges;  // rule index -> class
    std::set<StateName> crimson;
    std::set<StateName> gold;
    std::string message;
    GraphOutcome outcome = GraphOutcome::Reject;
    std::size_t threshold = 0;
    /// Set on Accept: the computation the graph was trimmed to.
    std::optional<Trace> accepting_trace;
};

std::string outcome_message(GraphOutcome outcome, std::size_t threshold);

/// Computation graph of `def` on the word. On accept the graph holds exactly
/// the states and rules of the first accepting computation found; otherwise
/// it holds everything any computation used, with halting states crimson and
/// cut-off states gold. The returned graph refers to `def`, which must outlive it.
CmpGraph build_cmpgraph(const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                        std::size_t threshold);

/// Same, from an exploration that already ran.
CmpGraph cmpgraph_from_exploration(const MachineDef& def, const Exploration& exploration);

std::string render_cmpgraph(const CmpGraph& g);

}  // namespace fsmlab
