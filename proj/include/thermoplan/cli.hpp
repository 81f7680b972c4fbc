#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thermoplan/generator.hpp"
#include "thermoplan/solver.hpp"
#include "thermoplan/strategy.hpp"

namespace thermoplan {

// Exit codes of the command-line tool.
enum ExitCode {
    exit_ok = 0,
    exit_failed = 1,     // infeasible instance, or a plan that does not verify
    exit_invalid = 2,    // unreadable or invalid input, bad flags
    exit_budget = 3,     // budget ran out before optimality was proven
    exit_internal = 4,   // an internal invariant broke
};

/// Entry point of the `thermoplan` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int exit_code(Status status);

/// One benchmark configuration: a named mix of solver features.
struct BenchConfig {
    std::string name;
    Variant variant = Variant::Bounded;
    Heuristic heuristic = Heuristic::Impact;
    bool multi_stage = true;
    bool baseline = false;  // first-fit packing then TSP order, no search
};

/// "full", "base", "wdeg", "single", "cm-tsp".
BenchConfig bench_config(const std::string& name);

struct BenchClass {
    int tests = 0;
    Phase phase = Phase::Cold;
    std::string label() const;
};

/// "30-cold" style labels.
BenchClass parse_class(const std::string& text);
/// "1..5", "3" or "1,4,9".
std::vector<std::uint64_t> parse_seeds(const std::string& text);

struct BenchRow {
    BenchClass cls;
    std::uint64_t seed = 0;
    ObjectiveMode mode = ObjectiveMode::Weighted;
    BenchConfig config;
    double budget = 0;
    long long node_budget = -1;
    SolveOutcome outcome;
    double millis = 0;
};

struct BenchRequest {
    std::vector<BenchClass> classes;
    std::vector<std::uint64_t> seeds;
    std::vector<ObjectiveMode> modes{ObjectiveMode::Weighted};
    std::vector<std::string> configs{"full"};
    double budget = 60;
    long long nodes = -1;
    int jobs = 1;
};

/// Runs every (class, seed, mode, config) combination, `jobs` at a time, each
/// with its own solver. Rows come back in request order.
std::vector<BenchRow> run_bench(const BenchRequest& request);

inline constexpr const char* bench_header =
    "class,seed,mode,strategy,variant,nconf,nswitch,status,nodes,fails,time_ms,"
    "config,stages,weighted,budget_s,node_budget,generator";

std::string bench_csv_row(const BenchRow& row);
/// Per (class, mode, config): means of nconf, nswitch and weighted, and the
/// number of proven optima in the status column as "optimal=k/N".
std::vector<std::string> bench_aggregate_rows(const std::vector<BenchRow>& rows);

}  // namespace thermoplan
