// Prints a per-instance comparison of both engines: size, time and stored
// polynomials, one fresh session per run.

#include <chrono>
#include <cstdio>
#include <vector>

#include "parmreach/benchgen.hpp"
#include "parmreach/elimination.hpp"
#include "parmreach/model_parser.hpp"
#include "parmreach/scc_checker.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

int main() {
    std::vector<BenchSpec> specs;
    for (unsigned n : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) specs.push_back(BenchSpec::brp(n, 2));
    for (unsigned runs : {2u, 4u, 8u, 16u}) specs.push_back(BenchSpec::crowds(5, runs));
    for (unsigned n : {1u, 2u, 3u, 4u, 8u}) specs.push_back(BenchSpec::zeroconf(n));

    std::printf("%-14s %7s %7s | %10s %8s %6s | %10s %8s\n", "instance", "states", "trans", "scc time", "polys",
                "sites", "elim time", "polys");
    for (const BenchSpec& spec : specs) {
        std::string text = generate(spec);
        ReachabilityResult scc, elim;
        std::size_t states = 0, transitions = 0;
        {
            ScopedSession s;
            Pdtmc m = parse_model(text);
            states = m.num_states();
            transitions = m.num_transitions();
            scc = model_check(m);
        }
        {
            ScopedSession s;
            elim = eliminate_all(parse_model(text));
        }
        std::printf("%-14s %7zu %7zu | %10.4f %8llu %6zu | %10.4f %8llu\n", spec.name().c_str(), states, transitions,
                    scc.stats.seconds, static_cast<unsigned long long>(scc.stats.pool.stored_polynomials),
                    scc.stats.abstraction_sites, elim.stats.seconds,
                    static_cast<unsigned long long>(elim.stats.pool.stored_polynomials));
    }
}
