#include "parmreach/oracle.hpp"

#include <random>
#include <vector>

#include "parmreach/errors.hpp"

namespace parmreach {
namespace {

bool absorbing(const Dtmc& d, StateId s) {
    const auto& row = d.row(s);
    if (row.empty()) return true;
    auto it = row.find(s);
    return it != row.end() && it->second == 1;
}

}  // namespace

ReachTable numeric_reachability(const Dtmc& d, const StateSet& targets) {
    // states with a path to some target
    std::map<StateId, std::vector<StateId>> preds;
    for (const auto& [s, row] : d.trans)
        for (const auto& [t, p] : row)
            if (p != 0) preds[t].push_back(s);
    StateSet relevant;
    std::vector<StateId> todo;
    for (StateId t : targets)
        if (d.states.count(t) && relevant.insert(t).second) todo.push_back(t);
    while (!todo.empty()) {
        StateId s = todo.back();
        todo.pop_back();
        for (StateId p : preds[s])
            if (d.states.count(p) && relevant.insert(p).second) todo.push_back(p);
    }

    std::vector<StateId> unknowns;
    std::map<StateId, std::size_t> index;
    for (StateId s : relevant)
        if (!targets.count(s) && !absorbing(d, s)) {
            index.emplace(s, unknowns.size());
            unknowns.push_back(s);
        }
    std::vector<StateId> target_list(targets.begin(), targets.end());
    std::size_t n = unknowns.size();
    std::size_t k = target_list.size();

    // (I - P) x = b, one right-hand side per target
    std::vector<std::map<std::size_t, Rational>> a(n);
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(k));
    std::vector<std::set<std::size_t>> rows_with(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        for (const auto& [t, p] : d.row(unknowns[i])) {
            if (auto it = index.find(t); it != index.end()) {
                a[i][it->second] -= p;
            } else {
                for (std::size_t j = 0; j < k; ++j)
                    if (target_list[j] == t) b[i][j] += p;
            }
        }
        for (auto it = a[i].begin(); it != a[i].end();) it = it->second == 0 ? a[i].erase(it) : std::next(it);
        for (const auto& [c, v] : a[i]) rows_with[c].insert(i);
    }

    // forward elimination with the diagonal as pivot
    for (std::size_t c = 0; c < n; ++c) {
        auto pivot_it = a[c].find(c);
        if (pivot_it == a[c].end() || pivot_it->second == 0)
            throw SingularSystem("reachability system is singular at state '" + d.label(unknowns[c]) + "'");
        Rational pivot = pivot_it->second;
        std::vector<std::size_t> below;
        for (std::size_t r : rows_with[c])
            if (r > c) below.push_back(r);
        for (std::size_t r : below) {
            Rational factor = a[r][c] / pivot;
            for (const auto& [col, v] : a[c]) {
                Rational& cell = a[r][col];
                cell -= factor * v;
                if (cell == 0) {
                    a[r].erase(col);
                    rows_with[col].erase(r);
                } else {
                    rows_with[col].insert(r);
                }
            }
            for (std::size_t j = 0; j < k; ++j) b[r][j] -= factor * b[c][j];
        }
    }
    // back substitution
    std::vector<std::vector<Rational>> x(n, std::vector<Rational>(k));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational acc = b[i][j];
            for (const auto& [col, v] : a[i])
                if (col > i) acc -= v * x[col][j];
            x[i][j] = acc / a[i].at(i);
        }
    }

    ReachTable result;
    for (StateId s : d.states)
        for (std::size_t j = 0; j < k; ++j) {
            StateId t = target_list[j];
            Rational value = 0;
            if (s == t)
                value = 1;
            else if (auto it = index.find(s); it != index.end())
                value = x[it->second][j];
            result.emplace(std::pair{s, t}, value);
        }
    return result;
}

std::map<StateId, Rational> numeric_reachability_from_init(const Dtmc& d, const StateSet& targets) {
    ReachTable table = numeric_reachability(d, targets);
    std::map<StateId, Rational> result;
    for (StateId t : targets) result[t] = 0;
    for (const auto& [s, w] : d.init)
        for (StateId t : targets) result[t] += w * table.at({s, t});
    return result;
}

std::map<StateId, double> monte_carlo_reachability(const Dtmc& d, const StateSet& targets, std::uint64_t runs,
                                                   std::uint64_t seed, std::uint64_t max_steps) {
    struct Choices {
        std::vector<double> cumulative;
        std::vector<StateId> next;
    };
    auto build = [](const std::map<StateId, Rational>& row) {
        Choices c;
        double acc = 0;
        for (const auto& [t, p] : row) {
            acc += p.get_d();
            c.cumulative.push_back(acc);
            c.next.push_back(t);
        }
        return c;
    };
    Choices init = build(d.init);
    std::map<StateId, Choices> rows;
    for (StateId s : d.states) rows.emplace(s, build(d.row(s)));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    auto draw = [&](const Choices& c) {
        double u = uniform(rng) * c.cumulative.back();
        std::size_t i = 0;
        while (i + 1 < c.cumulative.size() && u >= c.cumulative[i]) ++i;
        return c.next[i];
    };

    std::map<StateId, std::uint64_t> hits;
    for (StateId t : targets) hits[t] = 0;
    for (std::uint64_t run = 0; run < runs; ++run) {
        StateId s = draw(init);
        for (std::uint64_t step = 0; step < max_steps && !absorbing(d, s); ++step) s = draw(rows.at(s));
        if (auto it = hits.find(s); it != hits.end()) ++it->second;
    }
    std::map<StateId, double> result;
    for (const auto& [t, h] : hits) result[t] = static_cast<double>(h) / static_cast<double>(runs);
    return result;
}

}  // namespace parmreach
