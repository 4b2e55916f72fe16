#include "parmreach/graph.hpp"

#include <algorithm>
#include <limits>

namespace parmreach {

Predecessors predecessors(const Pdtmc& m) {
    Predecessors preds;
    for (const auto& [s, row] : m.transitions())
        for (const auto& [t, f] : row) preds[t].insert(s);
    return preds;
}

StateSet inp(const Pdtmc& m, const StateSet& k, const Predecessors& preds) {
    StateSet result;
    for (StateId s : k) {
        if (m.init().count(s)) {
            result.insert(s);
            continue;
        }
        auto it = preds.find(s);
        if (it == preds.end()) continue;
        for (StateId p : it->second)
            if (!k.count(p) && m.has_state(p)) {
                result.insert(s);
                break;
            }
    }
    return result;
}

StateSet inp(const Pdtmc& m, const StateSet& k) { return inp(m, k, predecessors(m)); }

StateSet out(const Pdtmc& m, const StateSet& k) {
    StateSet result;
    for (StateId s : k)
        for (const auto& [t, f] : m.row(s))
            if (!k.count(t)) result.insert(t);
    return result;
}

std::vector<StateSet> tarjan_sccs(const Pdtmc& m, const StateSet& restriction) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<StateId> nodes(restriction.begin(), restriction.end());
    std::map<StateId, std::size_t> local;
    for (std::size_t i = 0; i < nodes.size(); ++i) local.emplace(nodes[i], i);

    std::vector<std::vector<std::size_t>> succ(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& [t, f] : m.row(nodes[i]))
            if (auto it = local.find(t); it != local.end()) succ[i].push_back(it->second);

    std::vector<std::size_t> index(nodes.size(), unvisited), low(nodes.size(), 0);
    std::vector<bool> on_stack(nodes.size(), false);
    std::vector<std::size_t> stack;
    std::vector<StateSet> sccs;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < nodes.size(); ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < succ[f.v].size()) {
                std::size_t w = succ[f.v][f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                StateSet scc;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    scc.insert(nodes[w]);
                } while (w != v);
                sccs.push_back(std::move(scc));
            }
        }
    }
    return sccs;
}

bool is_nontrivial_scc(const Pdtmc& m, const StateSet& scc) {
    if (scc.size() > 1) return true;
    if (scc.empty()) return false;
    StateId s = *scc.begin();
    return m.row(s).count(s) != 0;
}

bool is_bottom(const Pdtmc& m, const StateSet& scc) {
    for (StateId s : scc)
        for (const auto& [t, f] : m.row(s))
            if (!scc.count(t)) return false;
    return true;
}

StateSet reachable_from(const Pdtmc& m, const StateSet& from) {
    StateSet seen;
    std::vector<StateId> todo;
    for (StateId s : from)
        if (m.has_state(s) && seen.insert(s).second) todo.push_back(s);
    while (!todo.empty()) {
        StateId s = todo.back();
        todo.pop_back();
        for (const auto& [t, f] : m.row(s))
            if (m.has_state(t) && seen.insert(t).second) todo.push_back(t);
    }
    return seen;
}

namespace {

SccNode make_node(const Pdtmc& m, const Predecessors& preds, StateSet states) {
    SccNode node;
    node.inputs = inp(m, states, preds);
    node.outputs = out(m, states);
    StateSet inner;
    std::set_difference(states.begin(), states.end(), node.inputs.begin(), node.inputs.end(),
                        std::inserter(inner, inner.end()));
    for (auto& scc : tarjan_sccs(m, inner))
        if (is_nontrivial_scc(m, scc)) node.children.push_back(make_node(m, preds, std::move(scc)));
    node.states = std::move(states);
    return node;
}

}  // namespace

SccTree build_scc_tree(const Pdtmc& m) {
    SccTree tree;
    Predecessors preds = predecessors(m);
    for (auto& scc : tarjan_sccs(m, m.states()))
        if (is_nontrivial_scc(m, scc) && !is_bottom(m, scc))
            tree.roots.push_back(make_node(m, preds, std::move(scc)));
    return tree;
}

}  // namespace parmreach
