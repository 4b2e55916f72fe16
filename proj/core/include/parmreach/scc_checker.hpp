#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parmreach/pdtmc.hpp"
#include "parmreach/poly_pool.hpp"

namespace parmreach {

using StatePair = std::pair<StateId, StateId>;

struct Constraint {
    enum class Kind { EdgePositive, DenominatorNonzero };
    Kind kind;
    RationalFunction function;
    StatePair context;  // the edge, or (input state, input state) at an abstraction site
};

/// Abstraction of one induced sub-model.
struct AbstractionResult {
    std::map<StatePair, RationalFunction> abs_probs;  // scaled, input -> output
    std::map<StatePair, RationalFunction> raw_pabs;   // unscaled, includes returns to the input
    std::vector<Constraint> constraints;
};

struct RunStats {
    PoolStats pool;
    double seconds = 0.0;
    std::size_t abstraction_sites = 0;
};

struct ReachabilityResult {
    std::map<StatePair, RationalFunction> per_pair;  // (initial, target)
    RationalFunction total;
    std::vector<Constraint> constraints;
    RunStats stats;
};

struct ModelCheckOptions {
    /// Abstract sibling SCCs concurrently.
    bool parallel = false;
    /// Called with every model handed to solve_single_input/solve_multi_input
    /// and the abstraction computed for it.
    std::function<void(const Pdtmc&, const AbstractionResult&)> on_abstraction;
};

/// Sub-model on K and Out(K): outputs absorbing, uniform initial
/// distribution on Inp(K). Throws AbsorbingSubset if no transition leaves K.
Pdtmc induced(const Pdtmc& m, const StateSet& k);

/// Abstraction of a model with one initial state whose other non-absorbing
/// states are acyclic. Records a DenominatorNonzero constraint.
AbstractionResult solve_single_input(const Pdtmc& m);

/// Same for two or more initial states.
AbstractionResult solve_multi_input(const Pdtmc& m);

/// Replaces K by direct transitions from its inputs to its outputs.
Pdtmc substitute(const Pdtmc& m, const StateSet& k, const AbstractionResult& abs);

/// Recursive SCC abstraction of a preprocessed model: the result has
/// transitions only from initial states to absorbing states.
Pdtmc abstract(const Pdtmc& m, const ModelCheckOptions& options = {});

/// Same recursion, returning the abstraction of the whole model together
/// with every constraint recorded on the way.
AbstractionResult abstract_result(const Pdtmc& m, const ModelCheckOptions& options = {});

/// Reachability of the targets from every initial state. The model is
/// preprocessed first. Throws NoTargets.
ReachabilityResult model_check(const Pdtmc& m, const ModelCheckOptions& options = {});

/// EdgePositive constraint per transition of m.
std::vector<Constraint> edge_constraints(const Pdtmc& m);

/// Fills per_pair, total and stats from an abstracted model.
void fill_result(ReachabilityResult& r, const Pdtmc& original, const Pdtmc& abstracted);

}  // namespace parmreach
