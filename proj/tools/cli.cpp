#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parmreach/benchgen.hpp"
#include "parmreach/errors.hpp"
#include "parmreach/model_parser.hpp"
#include "parmreach/scc_checker.hpp"
#include "parmreach/session.hpp"
#include "parmreach/smt_export.hpp"

namespace parmreach::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

std::string trim(std::string s) {
    auto ws = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(s[i])) ++i;
    return s.substr(i);
}

std::string render(const RationalFunction& f, bool factored) {
    return factored ? f.to_factored_string() : f.to_string();
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("PARMREACH_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("PARMREACH_SEED is not a number: ") + s);
        }
    }
    return 0;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw UsageError("cannot write '" + path + "'");
    os << text;
}

Pdtmc load_for(const RunConfig& config) {
    if (!std::filesystem::is_regular_file(config.input))
        throw UsageError("cannot read model file '" + config.input + "'");
    Pdtmc m = load_model(config.input);
    if (!config.targets.empty()) {
        StateSet targets;
        for (const auto& name : config.targets) {
            auto s = m.find_state(name);
            if (!s || !m.has_state(*s)) throw UsageError("unknown target state '" + name + "'");
            targets.insert(*s);
        }
        m.set_targets(std::move(targets));
    }
    return m;
}

ReachabilityResult check(const RunConfig& config, const Pdtmc& m) {
    if (config.mode == Mode::Elim) return eliminate_all(m, config.order);
    ModelCheckOptions options;
    options.parallel = config.parallel;
    return model_check(m, options);
}

Assignment assignment_for(const RunConfig& config, const Pdtmc& m) {
    const auto& vars = current_session().variables();
    Assignment u;
    for (const auto& [name, value] : config.eval) {
        auto v = vars.find(name);
        bool declared = false;
        if (v)
            for (Variable p : m.params()) declared = declared || p == *v;
        if (!declared) throw UsageError("--eval names unknown parameter '" + name + "'");
        u[*v] = value;
    }
    for (Variable p : m.params())
        if (!u.count(p)) throw UsageError("--eval gives no value for parameter '" + vars.name(p) + "'");
    return u;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return UsageFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return UsageFailure;
    } catch (const SyntaxError& e) {
        err << "syntax error at " << e.what() << '\n';
        return ModelFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return ModelFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ModelFailure;
    }
}

}  // namespace

std::vector<std::pair<std::string, Rational>> parse_eval(const std::string& text) {
    std::vector<std::pair<std::string, Rational>> result;
    for (const auto& item : split(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected name=value in '" + item + "'");
        result.emplace_back(trim(item.substr(0, eq)), parse_rational(trim(item.substr(eq + 1))));
    }
    return result;
}

long peak_memory_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line))
        if (line.rfind("VmHWM:", 0) == 0) return std::strtol(line.c_str() + 6, nullptr, 10);
    return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ScopedSession session;
        if (config.pool_cap) session.get().pool().set_capacity(*config.pool_cap);
        Pdtmc m = load_for(config);
        std::optional<Assignment> u;
        if (!config.eval.empty()) u = assignment_for(config, m);

        ReachabilityResult r = check(config, m);
        out << "mode: " << (config.mode == Mode::Scc ? "scc" : "elim") << '\n';
        for (const auto& [pair, f] : r.per_pair)
            out << "P(" << m.label(pair.first) << " => " << m.label(pair.second) << ") = " << render(f, config.factored)
                << '\n';
        out << "total = " << render(r.total, config.factored) << '\n';

        if (u) {
            if (!is_graph_preserving(m, *u)) out << "note: the evaluation is not graph preserving\n";
            for (const auto& [pair, f] : r.per_pair) {
                Rational v = f.evaluate(*u);
                out << "P(" << m.label(pair.first) << " => " << m.label(pair.second) << ")[u] = " << to_string(v)
                    << " ~ " << to_decimal(v, 12) << '\n';
            }
            Rational total = r.total.evaluate(*u);
            out << "total[u] = " << to_string(total) << " ~ " << to_decimal(total, 12) << '\n';
        }

        if (config.constraints_out) write_file(*config.constraints_out, collect_constraints(r, m));

        if (config.stats) {
            out << "stats:\n"
                << "  states: " << m.num_states() << '\n'
                << "  transitions: " << m.num_transitions() << '\n'
                << "  time_s: " << r.stats.seconds << '\n'
                << "  stored_polynomials: " << r.stats.pool.stored_polynomials << '\n'
                << "  gcd_calls: " << r.stats.pool.gcd_kernel_calls << '\n';
            if (config.mode == Mode::Scc) out << "  abstraction_sites: " << r.stats.abstraction_sites << '\n';
            out << "  peak_memory_kb: " << peak_memory_kb() << '\n';
        }
        return int(Ok);
    });
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reachability probabilities of parametric Markov chains", "parmreach"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mode = "scc", order = "fewest", eval;
    std::string targets;
    std::size_t pool_cap = 0;

    auto add_check_options = [&](CLI::App* sub) {
        sub->add_option("model", config.input, "Model file")->required();
        sub->add_option("--mode", mode, "Engine")->check(CLI::IsMember({"scc", "elim"}));
        sub->add_option("--target", targets, "Comma-separated target states (overrides @target)");
        sub->add_option("--order", order, "Elimination order")
            ->check(CLI::IsMember({"declaration", "fewest", "random"}));
        sub->add_option("--pool-cap", pool_cap, "Flatten factorizations once this many polynomials are stored");
        sub->add_flag("--parallel", config.parallel, "Abstract sibling SCCs concurrently");
    };

    CLI::App* check_cmd = app.add_subcommand("check", "Compute reachability functions");
    add_check_options(check_cmd);
    check_cmd->add_option("--eval", eval, "Evaluate at a point, e.g. p=1/2,q=1/2");
    check_cmd->add_flag("--factored", config.factored, "Print factorized functions");
    check_cmd->add_option("--constraints-out", config.constraints_out, "Write SMT-LIB constraints to a file");
    check_cmd->add_flag("--stats", config.stats, "Print time, pool size and memory");

    CLI::App* constraints_cmd = app.add_subcommand("constraints", "Print SMT-LIB well-definedness constraints");
    add_check_options(constraints_cmd);
    std::string constraints_path;
    constraints_cmd->add_option("-o,--output", constraints_path, "Output file (default: stdout)");

    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a benchmark model");
    std::string family;
    unsigned n = 2, max = 1, runs = 2;
    std::string gen_path;
    gen_cmd->add_option("--family", family, "brp, crowds or zeroconf")
        ->required()
        ->check(CLI::IsMember({"brp", "crowds", "zeroconf"}));
    gen_cmd->add_option("--n", n, "Chunks (brp), crowd size (crowds) or probes (zeroconf)");
    gen_cmd->add_option("--max", max, "Retransmissions per chunk (brp)");
    gen_cmd->add_option("--runs", runs, "Protocol runs (crowds)");
    gen_cmd->add_option("-o,--output", gen_path, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? int(Ok) : int(UsageFailure);
    }

    return guarded(err, [&] {
        if (gen_cmd->parsed()) {
            BenchSpec spec = family == "brp" ? BenchSpec::brp(n, max)
                             : family == "crowds" ? BenchSpec::crowds(n, runs)
                                                  : BenchSpec::zeroconf(n);
            std::string text = generate(spec);
            if (gen_path.empty())
                out << text;
            else
                write_file(gen_path, text);
            return int(Ok);
        }

        config.mode = mode == "elim" ? Mode::Elim : Mode::Scc;
        config.targets = split(targets, ',');
        if (pool_cap) config.pool_cap = pool_cap;
        if (order == "declaration")
            config.order = EliminationOrder::declaration();
        else if (order == "random")
            config.order = EliminationOrder::random(seed_from_env());
        else
            config.order = EliminationOrder::fewest_transitions();
        if (!eval.empty()) config.eval = parse_eval(eval);

        if (constraints_cmd->parsed()) {
            ScopedSession session;
            Pdtmc m = load_for(config);
            ReachabilityResult r = check(config, m);
            std::string text = collect_constraints(r, m);
            if (constraints_path.empty())
                out << text;
            else
                write_file(constraints_path, text);
            return int(Ok);
        }
        return run(config, out, err);
    });
}

}  // namespace parmreach::cli
