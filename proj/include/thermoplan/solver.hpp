#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "thermoplan/instance.hpp"
#include "thermoplan/model.hpp"
#include "thermoplan/plan.hpp"

namespace thermoplan {

enum class Heuristic { Impact, Wdeg, Lex };
std::string to_string(Heuristic h);

/// Search limits; any of them ends the run. Negative counts mean no limit.
struct Budget {
    double seconds = std::numeric_limits<double>::infinity();
    long long nodes = -1;
    long long fails = -1;
    long long solutions = -1;
};

enum class Status { Optimal, Feasible, Infeasible, Unknown };
std::string to_string(Status s);

struct SearchStats {
    long long nodes = 0;
    long long fails = 0;
    long long propagations = 0;
    long long solutions = 0;
    double seconds = 0;

    SearchStats& operator+=(const SearchStats& o);
};

/// One accepted incumbent.
struct TimelineEntry {
    std::string phase;
    double seconds = 0;
    int configurations = 0;
    long long switches = 0;
    long long weighted = 0;
};

struct PhaseReport {
    std::string name;
    Status status = Status::Unknown;
    bool exhausted = false;
    SearchStats stats;
};

/// Proven lower bounds and incumbent upper bounds; -1 when unknown.
struct Bounds {
    int configurations_lo = 0;
    int configurations_hi = -1;
    long long switches_lo = 0;
    long long switches_hi = -1;
    long long weighted_lo = 0;
    long long weighted_hi = -1;
};

struct SolveOutcome {
    std::optional<Plan> plan;
    std::optional<ObjectiveValue> value;
    Status status = Status::Unknown;
    bool exhausted = false;  // the search tree was fully explored
    bool switches_upper_only = false;
    Bounds bounds;
    SearchStats stats;
    std::vector<PhaseReport> phases;
    std::vector<TimelineEntry> timeline;
};

struct SolveOptions {
    ModelOptions model;
    Heuristic heuristic = Heuristic::Impact;
    Budget budget;
    int slots = -1;              // configuration columns; -1 means one per test
    int min_configurations = 0;  // proven lower bound on C from earlier work
    std::optional<Plan> incumbent;  // only strictly better plans are searched
    std::string phase = "solve";    // label for the timeline
};

/// Branch and bound over the full model (configurations and switches).
SolveOutcome solve(const Instance& inst, const SolveOptions& options);

/// Minimizes the configuration count only; activity is any feasible completion.
SolveOutcome solve_packing(const Instance& inst, const SolveOptions& options);

/// Best order and activity for the configurations of `packing`. Each
/// configuration becomes one grouped test; the switch count found is an
/// upper bound for the instance, never a lower one.
SolveOutcome solve_sequencing(const Instance& inst, const Plan& packing,
                              const SolveOptions& options);

/// Runs the search on a prepared model. Exposed for tests and the strategy.
SolveOutcome search(Model& model, const SolveOptions& options);

/// The grouped instance used by solve_sequencing: one test per configuration
/// of `packing`, requiring the union of its tests' units.
Instance grouped_instance(const Instance& inst, const Plan& packing);

/// Better in the given mode; packing compares configurations only.
bool improves(const ObjectiveValue& candidate, const ObjectiveValue& incumbent,
              ObjectiveMode mode, ModelKind kind = ModelKind::Full);

}  // namespace thermoplan
