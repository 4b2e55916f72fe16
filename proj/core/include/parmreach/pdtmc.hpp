#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "parmreach/rational_function.hpp"

namespace parmreach {

using StateId = std::uint32_t;
using StateSet = std::set<StateId>;
using Row = std::map<StateId, RationalFunction>;

/// Parametric discrete-time Markov chain.
///
/// State ids are declaration indices into a label table shared by every
/// model derived from the same source (induced sub-models, substitutions,
/// preprocessing), so a state keeps its id across all of them. Only the
/// states in `states()` belong to this particular model.
class Pdtmc {
public:
    Pdtmc();

    StateId add_state(std::string label);
    std::optional<StateId> find_state(std::string_view label) const;
    const std::string& label(StateId s) const { return (*labels_)[s]; }
    std::shared_ptr<const std::vector<std::string>> label_table() const { return labels_; }
    const StateSet& states() const noexcept { return states_; }
    bool has_state(StateId s) const { return states_.count(s) != 0; }
    std::size_t num_states() const noexcept { return states_.size(); }
    std::size_t num_transitions() const;

    const std::vector<Variable>& params() const noexcept { return params_; }
    void add_param(Variable v);

    const std::map<StateId, RationalFunction>& init() const noexcept { return init_; }
    /// Zero values erase the entry.
    void set_init(StateId s, RationalFunction value);
    /// States with a nonzero initial value.
    StateSet initial_states() const;

    const std::map<StateId, Row>& transitions() const noexcept { return trans_; }
    const Row& row(StateId s) const;
    /// Zero values erase the entry.
    void set_transition(StateId from, StateId to, RationalFunction value);
    void set_row(StateId s, Row row);
    /// Adds `value` to an existing entry.
    void add_transition(StateId from, StateId to, const RationalFunction& value);
    void make_absorbing(StateId s);
    bool is_absorbing(StateId s) const;
    StateSet absorbing_states() const;

    const StateSet& targets() const noexcept { return targets_; }
    void add_target(StateId s) { targets_.insert(s); }
    void set_targets(StateSet targets) { targets_ = std::move(targets); }

    /// Adds an existing state id (from the shared label table) to this model.
    void include_state(StateId s);
    /// Removes the state with its row, initial value and target mark.
    /// Transitions of other states into it are left untouched.
    void erase_state(StateId s);

    /// Same label table and parameters, no states.
    Pdtmc empty_like() const;

    /// Symbolic sum of the row.
    RationalFunction row_sum(StateId s) const;

private:
    std::shared_ptr<std::vector<std::string>> labels_;
    StateSet states_;
    std::vector<Variable> params_;
    std::map<StateId, RationalFunction> init_;
    std::map<StateId, Row> trans_;
    StateSet targets_;
};

/// Total evaluation of the model parameters.
using Evaluation = Assignment;

/// Concrete DTMC with exact probabilities.
struct Dtmc {
    std::shared_ptr<const std::vector<std::string>> labels;
    StateSet states;
    std::map<StateId, Rational> init;
    std::map<StateId, std::map<StateId, Rational>> trans;

    const std::map<StateId, Rational>& row(StateId s) const;
    const std::string& label(StateId s) const { return (*labels)[s]; }
};

/// Violated well-definedness conditions at u; empty when u is well defined.
std::vector<std::string> well_definedness_violations(const Pdtmc& m, const Evaluation& u);

/// Evaluated model. Entries that are undefined at u become 0. Throws
/// NotWellDefined listing the violated conditions, MissingAssignment if u
/// is not total.
Dtmc evaluate(const Pdtmc& m, const Evaluation& u);

/// Well defined and every edge of the model evaluates strictly positive.
bool is_graph_preserving(const Pdtmc& m, const Evaluation& u);

}  // namespace parmreach
