#include <doctest.h>

#include <random>

#include "fuzz.hpp"
#include "parmreach/elimination.hpp"
#include "parmreach/errors.hpp"
#include "parmreach/model_parser.hpp"
#include "parmreach/oracle.hpp"
#include "parmreach/scc_checker.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

Pdtmc nine_state() { return load_model(PARMREACH_FIXTURES "/nine_state.pdtmc"); }
StateId id(const Pdtmc& m, const char* name) { return *m.find_state(name); }
RationalFunction rf(const char* text) { return parse_expression(text); }

}  // namespace

TEST_CASE("eliminating a chain state") {
    ScopedSession s;
    Pdtmc m = parse_model("@state a\n@state x\n@state b\n@init a : 1\n@trans a -> x : 1\n@trans x -> b : 1\n");
    Pdtmc r = eliminate_state(m, id(m, "x"));
    CHECK(!r.has_state(id(m, "x")));
    CHECK(r.row(id(m, "a")).size() == 1);
    CHECK(r.row(id(m, "a")).at(id(m, "b")).is_one());
}

TEST_CASE("geometric self-loop collapses") {
    ScopedSession s;
    Pdtmc m = parse_model(
        "@params x\n@state a\n@state s\n@state b\n@init a : 1\n@trans a -> s : 1\n@trans s -> s : x\n@trans s -> b : 1-x\n");
    Pdtmc r = eliminate_state(m, id(m, "s"));
    CHECK(r.row(id(m, "a")).at(id(m, "b")).is_one());
}

TEST_CASE("eliminating s8 from the induced sub-model of {s7, s8}") {
    ScopedSession s;
    Pdtmc m = nine_state();
    Pdtmc k = induced(m, {id(m, "s7"), id(m, "s8")});
    Pdtmc r = eliminate_state(k, id(m, "s8"));
    StateId s7 = id(m, "s7");
    CHECK(r.row(s7).at(s7) == rf("0.3*p"));
    CHECK(r.row(s7).at(id(m, "s9")) == rf("0.3*(1-p)"));
    CHECK(r.row_sum(s7).is_one());
}

TEST_CASE("absorbing states cannot be eliminated") {
    ScopedSession s;
    Pdtmc m = nine_state();
    CHECK_THROWS_AS(eliminate_state(m, id(m, "s5")), SelfLoopProbabilityOne);
}

TEST_CASE("all strategies agree with the SCC engine on the nine-state example") {
    ScopedSession s;
    Pdtmc m = nine_state();
    ReachabilityResult scc = model_check(m);
    for (auto order : {EliminationOrder::declaration(), EliminationOrder::fewest_transitions(),
                       EliminationOrder::random(1), EliminationOrder::random(2)}) {
        ReachabilityResult e = eliminate_all(m, order);
        CHECK(e.per_pair == scc.per_pair);
        CHECK(e.total == scc.total);
    }
}

TEST_CASE("already abstract model is unchanged") {
    ScopedSession s;
    Pdtmc m = parse_model(
        "@params p\n@state i\n@state a\n@state b\n@init i : 1\n@trans i -> a : p\n@trans i -> b : 1-p\n@target a\n");
    ReachabilityResult r = eliminate_all(m);
    CHECK(r.per_pair.at({id(m, "i"), id(m, "a")}) == rf("p"));
}

TEST_CASE("row sums stay one after every elimination step") {
    ScopedSession s;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 15; ++i) {
        Pdtmc m = testing::random_preprocessed(rng, {3, 15, 3, 3, 0.2, 0.6});
        Predecessors preds = predecessors(m);
        StateSet initial = m.initial_states();
        for (StateId st : StateSet(m.states())) {
            if (initial.count(st) || m.is_absorbing(st)) continue;
            eliminate_state(m, preds, st);
            for (StateId x : m.states()) CHECK(m.row_sum(x).is_one());
            Predecessors live = preds;
            for (auto it = live.begin(); it != live.end();) it = it->second.empty() ? live.erase(it) : std::next(it);
            CHECK(live == predecessors(m));
        }
    }
}

TEST_CASE("random models: strategies agree symbolically and with the oracle") {
    ScopedSession s;
    std::mt19937_64 rng(15);
    for (int i = 0; i < 20; ++i) {
        Pdtmc m = testing::random_preprocessed(rng, {10, 15, 3, 3, 0.2, 0.6});
        ReachabilityResult a = eliminate_all(m, EliminationOrder::declaration());
        ReachabilityResult b = eliminate_all(m, EliminationOrder::fewest_transitions());
        ReachabilityResult c = eliminate_all(m, EliminationOrder::random(static_cast<std::uint64_t>(i)));
        CHECK(a.per_pair == b.per_pair);
        CHECK(a.per_pair == c.per_pair);
        Assignment u = testing::random_point(rng, m);
        ReachTable oracle = numeric_reachability(evaluate(m, u), m.targets());
        for (const auto& [key, f] : a.per_pair) CHECK(f.evaluate(u) == oracle.at(key));
    }
}
