#pragma once

#include <vector>

#include "thermoplan/instance.hpp"

namespace thermoplan {

/// Units sharing a test with `unit`, the unit itself included when it is
/// tested. Empty for untested units.
UnitSet neighborhood(const Instance& inst, int unit);

/// Configurations a unit must be active in: max over constraints c of
/// ceil(|neighborhood ∩ scope_c| / capacity_c). 0 for untested units.
int lb_ntested(const Instance& inst, int unit);

/// Per-unit neighborhoods and activation bounds, computed once per instance.
struct NeighborhoodTable {
    std::vector<UnitSet> neighbors;
    std::vector<int> min_active;

    explicit NeighborhoodTable(const Instance& inst);
};

/// max over constraints of ceil(sum of min_active over the scope / capacity).
int lb_configs(const Instance& inst, const std::vector<int>& min_active);
int lb_configs(const Instance& inst);

inline long long ceil_div(long long a, long long b)
{
    return (a + b - 1) / b;
}

}  // namespace thermoplan
