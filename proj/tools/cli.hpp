#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "parmreach/elimination.hpp"
#include "parmreach/polynomial.hpp"

namespace parmreach::cli {

enum class Mode { Scc, Elim };

struct RunConfig {
    std::string input;
    Mode mode = Mode::Scc;
    std::vector<std::pair<std::string, Rational>> eval;
    std::vector<std::string> targets;
    bool factored = false;
    std::optional<std::string> constraints_out;
    bool stats = false;
    EliminationOrder order;
    std::optional<std::size_t> pool_cap;
    bool parallel = false;
};

enum Exit : int { Ok = 0, ModelFailure = 1, UsageFailure = 2 };

/// Loads and checks the model described by `config`, printing the report.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `check`, `gen` and `constraints` subcommands.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "p=1/2,q=0.25". Throws std::invalid_argument.
std::vector<std::pair<std::string, Rational>> parse_eval(const std::string& text);

/// Peak resident set size in kB, or 0 when unavailable.
long peak_memory_kb();

}  // namespace parmreach::cli
