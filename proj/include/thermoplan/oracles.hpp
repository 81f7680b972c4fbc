#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "thermoplan/instance.hpp"
#include "thermoplan/plan.hpp"
#include "thermoplan/switch_engine.hpp"

namespace thermoplan {

// Exhaustive reference solvers. They share no code with the propagators or
// the greedy support and refuse inputs above their size guards.

class OracleGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Minimum switch count over every sequence meeting bounds and card whose
/// union covers `must_visit`; nullopt if there is none. Requires
/// length <= 5 and universe <= 4.
std::optional<int> oracle_switch(const SetVarBounds& bounds, const CardProfile& card,
                                 const std::vector<char>& must_visit);

struct OracleResult {
    int configurations = 0;  // C* (lexicographic optimum)
    long long switches = 0;  // z* given C*
    Plan plan;               // attains (C*, z*)

    // Best plan for weight * C + z, with weight = configuration_weight(units, slots).
    long long weighted = 0;
    int weighted_configurations = 0;
    long long weighted_switches = 0;
    Plan weighted_plan;
};

/// Enumerates every packing (restricted-growth strings), every visiting order
/// and every exact-cardinality activity completion. Requires n <= 7 and
/// m <= 8, or n <= 8 when m <= 6. `slots` sets the weight of the weighted
/// optimum (defaults to n).
OracleResult oracle_plan(const Instance& inst, std::optional<int> slots = std::nullopt);

bool oracle_plan_fits(const Instance& inst);

}  // namespace thermoplan
