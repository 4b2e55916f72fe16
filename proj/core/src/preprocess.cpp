#include "parmreach/preprocess.hpp"

#include "parmreach/graph.hpp"

namespace parmreach {
namespace {

void drop_unreachable(Pdtmc& m) {
    StateSet keep = reachable_from(m, m.initial_states());
    StateSet all = m.states();
    for (StateId s : all)
        if (!keep.count(s)) m.erase_state(s);
}

}  // namespace

Pdtmc preprocess(const Pdtmc& input) {
    Pdtmc m = input;
    for (StateId t : m.targets())
        if (!m.is_absorbing(t)) m.make_absorbing(t);
    drop_unreachable(m);

    Predecessors preds = predecessors(m);
    bool changed = false;
    for (const auto& scc : tarjan_sccs(m, m.states())) {
        if (!is_bottom(m, scc)) continue;
        if (scc.size() == 1 && m.is_absorbing(*scc.begin())) continue;
        for (StateId s : inp(m, scc, preds)) {
            m.make_absorbing(s);
            changed = true;
        }
    }
    if (changed) drop_unreachable(m);
    return m;
}

bool is_preprocessed(const Pdtmc& m) {
    for (StateId t : m.targets())
        if (!m.is_absorbing(t)) return false;
    for (const auto& scc : tarjan_sccs(m, m.states()))
        if (is_bottom(m, scc) && !(scc.size() == 1 && m.is_absorbing(*scc.begin()))) return false;
    return true;
}

}  // namespace parmreach
