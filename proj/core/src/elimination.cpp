#include "parmreach/elimination.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "parmreach/errors.hpp"
#include "parmreach/preprocess.hpp"
#include "parmreach/scc_checker.hpp"
#include "parmreach/session.hpp"

namespace parmreach {

RationalFunction fold_self_loop(Pdtmc& m, StateId s) {
    const Row& row = m.row(s);
    auto loop = row.find(s);
    if (loop == row.end()) return RationalFunction(1);
    RationalFunction d = RationalFunction(1) - loop->second;
    if (d.is_zero()) throw SelfLoopProbabilityOne("state '" + m.label(s) + "' has a self-loop with probability 1");
    Row scaled;
    for (const auto& [t, f] : row)
        if (t != s) scaled.emplace(t, f / d);
    m.set_row(s, std::move(scaled));
    return d;
}

void eliminate_state(Pdtmc& m, Predecessors& preds, StateId s) {
    Row out = m.row(s);
    if (auto loop = out.find(s); loop != out.end()) {
        RationalFunction d = RationalFunction(1) - loop->second;
        if (d.is_zero())
            throw SelfLoopProbabilityOne("state '" + m.label(s) + "' has a self-loop with probability 1");
        out.erase(loop);
        for (auto& [t, f] : out) f = f / d;
    }

    StateSet incoming;
    if (auto it = preds.find(s); it != preds.end()) incoming = it->second;
    for (StateId u : incoming) {
        if (u == s || !m.has_state(u)) continue;
        const Row& row = m.row(u);
        auto edge = row.find(s);
        if (edge == row.end()) continue;
        RationalFunction p = edge->second;
        m.set_transition(u, s, RationalFunction());
        for (const auto& [v, q] : out) {
            m.add_transition(u, v, p * q);
            if (m.row(u).count(v))
                preds[v].insert(u);
            else
                preds[v].erase(u);
        }
    }
    for (const auto& [v, q] : out) preds[v].erase(s);
    preds.erase(s);
    m.erase_state(s);
}

Pdtmc eliminate_state(const Pdtmc& m, StateId s) {
    Pdtmc r = m;
    Predecessors preds = predecessors(r);
    eliminate_state(r, preds, s);
    return r;
}

namespace {

std::size_t degree_without(const StateSet& set, StateId s) { return set.size() - (set.count(s) ? 1 : 0); }

std::size_t weight(const Pdtmc& m, const Predecessors& preds, StateId s) {
    std::size_t in = 0;
    if (auto it = preds.find(s); it != preds.end()) in = degree_without(it->second, s);
    std::size_t out = m.row(s).size() - (m.row(s).count(s) ? 1 : 0);
    return in * out;
}

void eliminate_candidates(Pdtmc& m, Predecessors& preds, StateSet candidates, const EliminationOrder& order) {
    using S = EliminationOrder::Strategy;
    if (order.strategy == S::FewestTransitionsFirst) {
        while (!candidates.empty()) {
            StateId best = *candidates.begin();
            std::size_t best_w = weight(m, preds, best);
            for (StateId s : candidates) {
                if (best_w == 0) break;
                std::size_t w = weight(m, preds, s);
                if (w < best_w) {
                    best = s;
                    best_w = w;
                }
            }
            candidates.erase(best);
            eliminate_state(m, preds, best);
        }
        return;
    }
    std::vector<StateId> sequence(candidates.begin(), candidates.end());
    if (order.strategy == S::Random) {
        std::mt19937_64 rng(order.seed);
        std::shuffle(sequence.begin(), sequence.end(), rng);
    }
    for (StateId s : sequence) eliminate_state(m, preds, s);
}

}  // namespace

ReachabilityResult eliminate_all(const Pdtmc& m, EliminationOrder order) {
    if (m.targets().empty()) throw NoTargets("the model has no target states");
    auto start = std::chrono::steady_clock::now();
    Pdtmc p = preprocess(m);
    Predecessors preds = predecessors(p);

    StateSet initial = p.initial_states();
    StateSet candidates;
    for (StateId s : p.states())
        if (!initial.count(s) && !p.is_absorbing(s)) candidates.insert(s);
    eliminate_candidates(p, preds, std::move(candidates), order);

    StateSet active;
    for (StateId s : initial)
        if (!p.is_absorbing(s)) active.insert(s);

    Pdtmc result = p;
    for (StateId si : active) {
        Pdtmc w = p;
        Predecessors wp = preds;
        for (StateId other : active)
            if (other != si) eliminate_state(w, wp, other);
        fold_self_loop(w, si);
        result.set_row(si, w.row(si));
    }

    ReachabilityResult r;
    fill_result(r, m, result);
    r.constraints = edge_constraints(m);
    r.stats.pool = current_session().pool().stats();
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace parmreach
