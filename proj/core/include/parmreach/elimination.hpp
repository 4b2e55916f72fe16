#pragma once

#include <cstdint>

#include "parmreach/graph.hpp"
#include "parmreach/pdtmc.hpp"

namespace parmreach {

struct ReachabilityResult;

struct EliminationOrder {
    enum class Strategy { DeclarationOrder, FewestTransitionsFirst, Random };
    Strategy strategy = Strategy::FewestTransitionsFirst;
    std::uint64_t seed = 0;

    static EliminationOrder declaration() { return {Strategy::DeclarationOrder, 0}; }
    static EliminationOrder fewest_transitions() { return {Strategy::FewestTransitionsFirst, 0}; }
    static EliminationOrder random(std::uint64_t seed) { return {Strategy::Random, seed}; }
};

/// Removes s, redirecting every predecessor u to every successor v:
///     P'(u,v) = P(u,v) + P(u,s) * 1/(1 - P(s,s)) * P(s,v)
/// Throws SelfLoopProbabilityOne if P(s,s) is 1.
Pdtmc eliminate_state(const Pdtmc& m, StateId s);

/// In-place variant that keeps `preds` up to date.
void eliminate_state(Pdtmc& m, Predecessors& preds, StateId s);

/// Divides the row of s by 1 - P(s,s) and drops the self-loop.
/// Returns the divisor. Throws SelfLoopProbabilityOne.
RationalFunction fold_self_loop(Pdtmc& m, StateId s);

/// Eliminates every state that is neither initial nor absorbing, then
/// resolves the initial states against each other.
ReachabilityResult eliminate_all(const Pdtmc& m, EliminationOrder order = {});

}  // namespace parmreach
