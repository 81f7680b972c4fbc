#pragma once

#include <optional>
#include <vector>

#include "thermoplan/instance.hpp"
#include "thermoplan/plan.hpp"

namespace thermoplan {

/// Packing-only stand-in for a commercial packing tool: tests in id order,
/// each into the first configuration that can still hold it, activity padded
/// with the lowest-numbered units to meet every capacity exactly. Throws
/// std::runtime_error when some test fits in no configuration at all.
Plan first_fit_pack(const Instance& inst);

/// Exact activity for a configuration that must contain `required`: lowest
/// numbered units first, with backtracking when scopes overlap. Empty
/// optional when no completion exists.
std::optional<UnitSet> complete_activity(const Instance& inst, const UnitSet& required);

struct TspResult {
    std::vector<int> order;  // visiting order of the configurations
    long long cost = 0;      // |A_first| + sum of Hamming distances along the path
    bool exact = false;      // true when solved by dynamic programming
};

/// Open-path order from an all-off start minimizing Hamming transitions.
/// Exact up to `exact_limit` configurations (at most 20), nearest neighbour
/// plus 2-opt beyond.
TspResult tsp_sequence(const std::vector<UnitSet>& configs, int exact_limit = 15);

int hamming(const UnitSet& a, const UnitSet& b);

/// Reorders the configurations of `plan` (allocation follows).
Plan reorder(const Plan& plan, const std::vector<int>& order);

/// first_fit_pack followed by tsp_sequence.
Plan packing_then_tsp(const Instance& inst);

}  // namespace thermoplan
