#pragma once

#include "fsmlab/machine.hpp"

namespace fsmlab::fixtures {

/// Deterministic 4-tape decider for words with equally many a's, b's and c's:
/// copy each letter to its own auxiliary tape, then match the copies.
MachineDef eqabc();

/// Nondeterministic variant: each letter may be copied to any auxiliary tape,
/// and the start state may also jump straight to the matching state.
MachineDef eqabc_nd();

}  // namespace fsmlab::fixtures
