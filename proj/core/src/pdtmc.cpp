#include "parmreach/pdtmc.hpp"

#include <algorithm>

#include "parmreach/errors.hpp"
#include "parmreach/session.hpp"

namespace parmreach {

Pdtmc::Pdtmc() : labels_(std::make_shared<std::vector<std::string>>()) {}

StateId Pdtmc::add_state(std::string label) {
    auto id = static_cast<StateId>(labels_->size());
    labels_->push_back(std::move(label));
    states_.insert(id);
    return id;
}

std::optional<StateId> Pdtmc::find_state(std::string_view label) const {
    for (StateId s : states_)
        if ((*labels_)[s] == label) return s;
    return std::nullopt;
}

std::size_t Pdtmc::num_transitions() const {
    std::size_t n = 0;
    for (const auto& [s, r] : trans_) n += r.size();
    return n;
}

void Pdtmc::add_param(Variable v) {
    if (std::find(params_.begin(), params_.end(), v) == params_.end()) params_.push_back(v);
}

void Pdtmc::set_init(StateId s, RationalFunction value) {
    if (value.is_zero())
        init_.erase(s);
    else
        init_[s] = std::move(value);
}

StateSet Pdtmc::initial_states() const {
    StateSet out;
    for (const auto& [s, v] : init_) out.insert(s);
    return out;
}

const Row& Pdtmc::row(StateId s) const {
    static const Row empty;
    auto it = trans_.find(s);
    return it == trans_.end() ? empty : it->second;
}

void Pdtmc::set_transition(StateId from, StateId to, RationalFunction value) {
    if (value.is_zero()) {
        if (auto it = trans_.find(from); it != trans_.end()) it->second.erase(to);
        return;
    }
    trans_[from][to] = std::move(value);
}

void Pdtmc::set_row(StateId s, Row row) {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    trans_[s] = std::move(row);
}

void Pdtmc::add_transition(StateId from, StateId to, const RationalFunction& value) {
    auto& r = trans_[from];
    auto it = r.find(to);
    if (it == r.end()) {
        if (!value.is_zero()) r.emplace(to, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) r.erase(it);
}

void Pdtmc::make_absorbing(StateId s) {
    Row r;
    r.emplace(s, RationalFunction(1));
    trans_[s] = std::move(r);
}

bool Pdtmc::is_absorbing(StateId s) const {
    const Row& r = row(s);
    return r.size() == 1 && r.begin()->first == s && r.begin()->second.is_one();
}

StateSet Pdtmc::absorbing_states() const {
    StateSet out;
    for (StateId s : states_)
        if (is_absorbing(s)) out.insert(s);
    return out;
}

void Pdtmc::include_state(StateId s) {
    if (s >= labels_->size()) throw std::out_of_range("state id outside the label table");
    states_.insert(s);
}

void Pdtmc::erase_state(StateId s) {
    states_.erase(s);
    trans_.erase(s);
    init_.erase(s);
    targets_.erase(s);
}

Pdtmc Pdtmc::empty_like() const {
    Pdtmc m;
    m.labels_ = labels_;
    m.params_ = params_;
    return m;
}

RationalFunction Pdtmc::row_sum(StateId s) const {
    RationalFunction sum;
    for (const auto& [t, f] : row(s)) sum += f;
    return sum;
}

const std::map<StateId, Rational>& Dtmc::row(StateId s) const {
    static const std::map<StateId, Rational> empty;
    auto it = trans.find(s);
    return it == trans.end() ? empty : it->second;
}

namespace {

struct Evaluated {
    Dtmc dtmc;
    std::vector<std::string> violations;
};

Evaluated evaluate_checked(const Pdtmc& m, const Evaluation& u) {
    for (Variable v : m.params())
        if (!u.count(v))
            throw MissingAssignment("no value for parameter '" + current_session().variables().name(v) + "'");
    Evaluated out;
    Dtmc& d = out.dtmc;
    d.labels = m.label_table();
    d.states = m.states();
    auto value_of = [&](const RationalFunction& f, const std::string& where) -> Rational {
        try {
            return f.evaluate(u);
        } catch (const EvalDenominatorZero&) {
            out.violations.push_back(where + " is undefined (pole)");
            return Rational(0);
        }
    };
    auto in_unit = [](const Rational& r) { return r >= 0 && r <= 1; };

    Rational init_sum = 0;
    for (const auto& [s, f] : m.init()) {
        Rational v = value_of(f, "I(" + m.label(s) + ")");
        if (!in_unit(v)) out.violations.push_back("I(" + m.label(s) + ") = " + to_string(v) + " not in [0,1]");
        init_sum += v;
        if (v != 0) d.init.emplace(s, v);
    }
    if (init_sum != 1) out.violations.push_back("initial distribution sums to " + to_string(init_sum));

    for (StateId s : m.states()) {
        Rational sum = 0;
        auto& row = d.trans[s];
        for (const auto& [t, f] : m.row(s)) {
            std::string where = "P(" + m.label(s) + "," + m.label(t) + ")";
            Rational v = value_of(f, where);
            if (!in_unit(v)) out.violations.push_back(where + " = " + to_string(v) + " not in [0,1]");
            sum += v;
            if (v != 0) row.emplace(t, v);
        }
        if (sum != 1) out.violations.push_back("row " + m.label(s) + " sums to " + to_string(sum));
    }
    return out;
}

}  // namespace

std::vector<std::string> well_definedness_violations(const Pdtmc& m, const Evaluation& u) {
    return evaluate_checked(m, u).violations;
}

Dtmc evaluate(const Pdtmc& m, const Evaluation& u) {
    Evaluated e = evaluate_checked(m, u);
    if (!e.violations.empty()) {
        std::string msg = "evaluation is not well defined:";
        for (const auto& v : e.violations) msg += "\n  " + v;
        throw NotWellDefined(msg);
    }
    return std::move(e.dtmc);
}

bool is_graph_preserving(const Pdtmc& m, const Evaluation& u) {
    Evaluated e = evaluate_checked(m, u);
    if (!e.violations.empty()) return false;
    for (StateId s : m.states())
        for (const auto& [t, f] : m.row(s))
            if (e.dtmc.row(s).count(t) == 0) return false;  // evaluated to 0
    return true;
}

}  // namespace parmreach
