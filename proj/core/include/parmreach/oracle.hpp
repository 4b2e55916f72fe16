#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "parmreach/pdtmc.hpp"

namespace parmreach {

/// (state, target) -> probability of eventually reaching the target.
using ReachTable = std::map<std::pair<StateId, StateId>, Rational>;

/// Exact reachability by Gaussian elimination over the rationals on the
/// system x_s = sum_s' P(s,s') x_s'. Targets must be absorbing. States that
/// cannot reach a target get 0. Throws SingularSystem.
ReachTable numeric_reachability(const Dtmc& d, const StateSet& targets);

/// Probability of reaching each target from the initial distribution.
std::map<StateId, Rational> numeric_reachability_from_init(const Dtmc& d, const StateSet& targets);

/// Empirical reachability frequencies of `runs` simulated paths started from
/// the initial distribution. A path stops at an absorbing state or after
/// `max_steps` steps.
std::map<StateId, double> monte_carlo_reachability(const Dtmc& d, const StateSet& targets, std::uint64_t runs,
                                                   std::uint64_t seed, std::uint64_t max_steps = 1'000'000);

}  // namespace parmreach
