#pragma once

#include <map>
#include <vector>

#include "parmreach/pdtmc.hpp"

namespace parmreach {

using Predecessors = std::map<StateId, StateSet>;

Predecessors predecessors(const Pdtmc& m);

/// States of K that are initial or entered from outside K.
StateSet inp(const Pdtmc& m, const StateSet& k);
StateSet inp(const Pdtmc& m, const StateSet& k, const Predecessors& preds);
/// States outside K entered from K.
StateSet out(const Pdtmc& m, const StateSet& k);

/// Strongly connected components of the subgraph induced by `restriction`,
/// emitted in reverse topological order of the condensation (an SCC comes
/// after every SCC it can reach). Roots are tried in increasing state id,
/// successors in increasing id, so the output is deterministic.
std::vector<StateSet> tarjan_sccs(const Pdtmc& m, const StateSet& restriction);

/// More than one state, or a single state with a self-loop.
bool is_nontrivial_scc(const Pdtmc& m, const StateSet& scc);
/// No transition leaves the set.
bool is_bottom(const Pdtmc& m, const StateSet& scc);

/// States reachable from `from` (inclusive).
StateSet reachable_from(const Pdtmc& m, const StateSet& from);

struct SccNode {
    StateSet states;
    StateSet inputs;
    StateSet outputs;
    std::vector<SccNode> children;
};

/// Hierarchical decomposition: top-level nodes are the non-bottom,
/// non-trivial SCCs of the whole graph; the children of a node are the
/// non-trivial SCCs of the node minus its input states.
struct SccTree {
    std::vector<SccNode> roots;
};

SccTree build_scc_tree(const Pdtmc& m);

}  // namespace parmreach
