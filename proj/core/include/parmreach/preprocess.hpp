#pragma once

#include "parmreach/pdtmc.hpp"

namespace parmreach {

/// Brings a model into the form the model checkers expect:
///  - target states become absorbing,
///  - states unreachable from the initial states are dropped,
///  - the input states of every bottom SCC become absorbing (the rest of
///    the bottom SCC then becomes unreachable and is dropped).
/// Reachability probabilities from the initial states to the targets are
/// unchanged at every graph-preserving evaluation.
Pdtmc preprocess(const Pdtmc& m);

/// True if every bottom SCC is a single absorbing state and every target
/// is absorbing.
bool is_preprocessed(const Pdtmc& m);

}  // namespace parmreach
