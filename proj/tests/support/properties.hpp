#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fsmlab::testing {

/// Outcome of one randomized property run. `failures` holds a readable
/// description of each counterexample (capped so a broken build stays legible).
struct PropertyReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

PropertyReport check_cmpgraph_within_diagram(std::uint32_t seed, std::size_t cases);
PropertyReport check_oracle_equivalence(std::uint32_t seed, std::size_t cases);
PropertyReport check_trace_replay(std::uint32_t seed, std::size_t cases);
PropertyReport check_threshold_monotonicity(std::uint32_t seed, std::size_t cases);
PropertyReport check_determinism(std::uint32_t seed, std::size_t cases);
PropertyReport check_step_invariants(std::uint32_t seed, std::size_t cases);
PropertyReport check_highlights_against_oracle(std::uint32_t seed, std::size_t cases);
PropertyReport check_deterministic_machines(std::uint32_t seed, std::size_t cases);

}  // namespace fsmlab::testing
