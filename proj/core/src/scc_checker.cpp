#include "parmreach/scc_checker.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

#include "parmreach/elimination.hpp"
#include "parmreach/errors.hpp"
#include "parmreach/graph.hpp"
#include "parmreach/preprocess.hpp"
#include "parmreach/session.hpp"

namespace parmreach {
namespace {

StateSet minus(const StateSet& a, const StateSet& b) {
    StateSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    return r;
}

void accumulate(std::map<StateId, RationalFunction>& into, StateId key, const RationalFunction& value) {
    auto [it, fresh] = into.try_emplace(key, value);
    if (!fresh) {
        it->second += value;
        if (it->second.is_zero()) into.erase(it);
    }
}

// Scales a raw row of input sI by 1 - p_abs(sI,sI) and stores both forms.
void finish_row(StateId input, const std::map<StateId, RationalFunction>& raw, AbstractionResult& r) {
    RationalFunction self;
    for (const auto& [t, f] : raw) {
        r.raw_pabs.emplace(StatePair{input, t}, f);
        if (t == input) self = f;
    }
    RationalFunction denom = RationalFunction(1) - self;
    if (denom.is_zero())
        throw std::logic_error("abstraction denominator vanishes at state " + std::to_string(input));
    for (const auto& [t, f] : raw) {
        if (t == input) continue;
        r.abs_probs.emplace(StatePair{input, t}, self.is_zero() ? f : f / denom);
    }
    r.constraints.push_back({Constraint::Kind::DenominatorNonzero, denom, {input, input}});
}

void identity_rows(const Pdtmc& m, AbstractionResult& r) {
    for (StateId s : m.initial_states())
        if (m.is_absorbing(s)) {
            r.abs_probs.emplace(StatePair{s, s}, RationalFunction(1));
            r.raw_pabs.emplace(StatePair{s, s}, RationalFunction(1));
        }
}

StateSet active_inputs(const Pdtmc& m) {
    StateSet r;
    for (StateId s : m.initial_states())
        if (!m.is_absorbing(s)) r.insert(s);
    return r;
}

struct Context {
    const ModelCheckOptions& options;
    std::vector<Constraint> constraints;
    std::size_t sites = 0;
};

AbstractionResult abstract_rec(Pdtmc mk, Context& ctx);

AbstractionResult abstract_child(const Pdtmc& parent, const StateSet& k, Context& ctx) {
    return abstract_rec(induced(parent, k), ctx);
}

AbstractionResult abstract_rec(Pdtmc mk, Context& ctx) {
    StateSet rest = minus(mk.states(), mk.initial_states());
    std::vector<StateSet> children;
    for (auto& scc : tarjan_sccs(mk, rest))
        if (is_nontrivial_scc(mk, scc) && !is_bottom(mk, scc)) children.push_back(std::move(scc));

    if (ctx.options.parallel && children.size() > 1) {
        std::vector<Context> locals;
        locals.reserve(children.size());
        for (std::size_t i = 0; i < children.size(); ++i) locals.push_back(Context{ctx.options, {}, 0});
        std::vector<std::future<AbstractionResult>> jobs;
        for (std::size_t i = 0; i < children.size(); ++i)
            jobs.push_back(std::async(std::launch::async, [&, i] { return abstract_child(mk, children[i], locals[i]); }));
        std::vector<AbstractionResult> results;
        for (auto& job : jobs) results.push_back(job.get());
        for (std::size_t i = 0; i < children.size(); ++i) {
            mk = substitute(mk, children[i], results[i]);
            ctx.constraints.insert(ctx.constraints.end(), locals[i].constraints.begin(), locals[i].constraints.end());
            ctx.sites += locals[i].sites;
        }
    } else {
        for (const StateSet& k : children) {
            AbstractionResult child = abstract_child(mk, k, ctx);
            mk = substitute(mk, k, child);
        }
    }

    AbstractionResult result = active_inputs(mk).size() <= 1 ? solve_single_input(mk) : solve_multi_input(mk);
    ++ctx.sites;
    if (ctx.options.on_abstraction) ctx.options.on_abstraction(mk, result);
    ctx.constraints.insert(ctx.constraints.end(), result.constraints.begin(), result.constraints.end());
    return result;
}

Pdtmc build_abstract(const Pdtmc& m, const AbstractionResult& ar) {
    Pdtmc r = m.empty_like();
    for (StateId s : m.initial_states()) r.include_state(s);
    for (StateId s : m.absorbing_states()) r.include_state(s);
    for (const auto& [s, f] : m.init()) r.set_init(s, f);
    std::map<StateId, Row> rows;
    for (const auto& [key, f] : ar.abs_probs) rows[key.first][key.second] = f;
    for (auto& [s, row] : rows) {
        for (const auto& [t, f] : row) r.include_state(t);
        r.set_row(s, std::move(row));
    }
    for (StateId s : m.absorbing_states()) r.make_absorbing(s);
    StateSet targets;
    for (StateId t : m.targets())
        if (r.has_state(t)) targets.insert(t);
    r.set_targets(std::move(targets));
    return r;
}

}  // namespace

Pdtmc induced(const Pdtmc& m, const StateSet& k) {
    StateSet outputs = out(m, k);
    if (outputs.empty()) throw AbsorbingSubset("no transition leaves the given state set");
    StateSet inputs = inp(m, k);
    Pdtmc r = m.empty_like();
    for (StateId s : k) {
        r.include_state(s);
        r.set_row(s, m.row(s));
    }
    for (StateId s : outputs) {
        r.include_state(s);
        r.make_absorbing(s);
    }
    if (!inputs.empty()) {
        RationalFunction share(Rational(1, static_cast<long>(inputs.size())));
        for (StateId s : inputs) r.set_init(s, share);
    }
    StateSet targets;
    for (StateId t : m.targets())
        if (outputs.count(t)) targets.insert(t);
    r.set_targets(std::move(targets));
    return r;
}

AbstractionResult solve_single_input(const Pdtmc& m) {
    AbstractionResult r;
    identity_rows(m, r);
    StateSet inputs = active_inputs(m);
    if (inputs.empty()) return r;
    if (inputs.size() > 1) throw std::invalid_argument("solve_single_input: more than one input state");
    StateId si = *inputs.begin();
    StateSet outputs = m.absorbing_states();

    if (outputs.size() == 1) {
        StateId t = *outputs.begin();
        r.abs_probs.emplace(StatePair{si, t}, RationalFunction(1));
        r.raw_pabs.emplace(StatePair{si, t}, RationalFunction(1));
        return r;
    }

    auto is_exit = [&](StateId t) { return t == si || outputs.count(t) != 0; };
    StateSet inner;
    for (StateId s : m.states())
        if (!is_exit(s)) inner.insert(s);

    // successors come first in Tarjan's order
    std::map<StateId, std::map<StateId, RationalFunction>> reach;
    for (const StateSet& scc : tarjan_sccs(m, inner)) {
        if (is_nontrivial_scc(m, scc)) throw std::logic_error("solve_single_input: cycle among inner states");
        StateId s = *scc.begin();
        auto& dest = reach[s];
        for (const auto& [t, p] : m.row(s)) {
            if (is_exit(t)) {
                accumulate(dest, t, p);
            } else {
                for (const auto& [e, q] : reach.at(t)) accumulate(dest, e, p * q);
            }
        }
    }

    std::map<StateId, RationalFunction> raw;
    for (const auto& [t, p] : m.row(si)) {
        if (is_exit(t)) {
            accumulate(raw, t, p);
        } else {
            for (const auto& [e, q] : reach.at(t)) accumulate(raw, e, p * q);
        }
    }
    finish_row(si, raw, r);
    return r;
}

AbstractionResult solve_multi_input(const Pdtmc& m) {
    AbstractionResult r;
    identity_rows(m, r);
    StateSet inputs = active_inputs(m);
    if (inputs.size() <= 1) return solve_single_input(m);

    Pdtmc work = m;
    Predecessors preds = predecessors(work);
    StateSet inner;
    for (StateId s : work.states())
        if (!inputs.count(s) && !work.is_absorbing(s)) inner.insert(s);
    for (const StateSet& scc : tarjan_sccs(work, inner)) {
        if (is_nontrivial_scc(work, scc)) throw std::logic_error("solve_multi_input: cycle among inner states");
        eliminate_state(work, preds, *scc.begin());
    }

    for (StateId si : inputs) {
        Pdtmc w = work;
        Predecessors wp = preds;
        for (StateId other : inputs)
            if (other != si) eliminate_state(w, wp, other);
        std::map<StateId, RationalFunction> raw(w.row(si).begin(), w.row(si).end());
        finish_row(si, raw, r);
    }
    return r;
}

Pdtmc substitute(const Pdtmc& m, const StateSet& k, const AbstractionResult& abs) {
    Pdtmc r = m;
    StateSet inputs = inp(m, k);
    for (StateId s : minus(k, inputs)) r.erase_state(s);
    std::map<StateId, Row> rows;
    for (const auto& [key, f] : abs.abs_probs)
        if (inputs.count(key.first)) rows[key.first][key.second] = f;
    for (auto& [s, row] : rows) r.set_row(s, std::move(row));
    return r;
}

AbstractionResult abstract_result(const Pdtmc& m, const ModelCheckOptions& options) {
    Context ctx{options, {}, 0};
    AbstractionResult r = abstract_rec(m, ctx);
    r.constraints = std::move(ctx.constraints);
    return r;
}

Pdtmc abstract(const Pdtmc& m, const ModelCheckOptions& options) {
    return build_abstract(m, abstract_result(m, options));
}

std::vector<Constraint> edge_constraints(const Pdtmc& m) {
    std::vector<Constraint> r;
    for (StateId s : m.states())
        for (const auto& [t, f] : m.row(s)) r.push_back({Constraint::Kind::EdgePositive, f, {s, t}});
    return r;
}

void fill_result(ReachabilityResult& r, const Pdtmc& original, const Pdtmc& abstracted) {
    r.per_pair.clear();
    r.total = RationalFunction();
    for (const auto& [si, weight] : original.init()) {
        RationalFunction sum;
        for (StateId t : original.targets()) {
            RationalFunction f;
            if (abstracted.has_state(si)) {
                const Row& row = abstracted.row(si);
                if (auto it = row.find(t); it != row.end()) f = it->second;
            }
            sum += f;
            r.per_pair.emplace(StatePair{si, t}, std::move(f));
        }
        r.total += weight * sum;
    }
}

ReachabilityResult model_check(const Pdtmc& m, const ModelCheckOptions& options) {
    if (m.targets().empty()) throw NoTargets("the model has no target states");
    auto start = std::chrono::steady_clock::now();
    Pdtmc p = preprocess(m);
    Context ctx{options, {}, 0};
    AbstractionResult ar = abstract_rec(p, ctx);
    Pdtmc abstracted = build_abstract(p, ar);

    ReachabilityResult r;
    fill_result(r, m, abstracted);
    r.constraints = edge_constraints(m);
    r.constraints.insert(r.constraints.end(), ctx.constraints.begin(), ctx.constraints.end());
    r.stats.abstraction_sites = ctx.sites;
    r.stats.pool = current_session().pool().stats();
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace parmreach
