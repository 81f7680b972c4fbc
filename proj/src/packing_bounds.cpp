#include "thermoplan/packing_bounds.hpp"

#include <algorithm>

namespace thermoplan {

UnitSet neighborhood(const Instance& inst, int unit)
{
    std::vector<char> in(inst.units, 0);
    for (const auto& e : inst.tests)
        if (std::binary_search(e.begin(), e.end(), unit))
            for (int v : e)
                in[v] = 1;
    UnitSet out;
    for (int v = 0; v < inst.units; ++v)
        if (in[v])
            out.push_back(v);
    return out;
}

namespace {

int bound_from(const Instance& inst, const UnitSet& gamma)
{
    int best = 0;
    for (const auto& tc : inst.thermal) {
        int inside = 0;
        for (int v : gamma)
            inside += std::binary_search(tc.scope.begin(), tc.scope.end(), v);
        best = std::max(best, static_cast<int>(ceil_div(inside, tc.capacity)));
    }
    // A tested unit outside every scope still needs one configuration.
    if (!gamma.empty())
        best = std::max(best, 1);
    return best;
}

}  // namespace

int lb_ntested(const Instance& inst, int unit)
{
    return bound_from(inst, neighborhood(inst, unit));
}

NeighborhoodTable::NeighborhoodTable(const Instance& inst)
{
    for (int u = 0; u < inst.units; ++u) {
        neighbors.push_back(neighborhood(inst, u));
        min_active.push_back(bound_from(inst, neighbors.back()));
    }
}

int lb_configs(const Instance& inst, const std::vector<int>& min_active)
{
    long long best = 0;
    for (const auto& tc : inst.thermal) {
        long long sum = 0;
        for (int u : tc.scope)
            sum += min_active[u];
        best = std::max(best, ceil_div(sum, tc.capacity));
    }
    if (inst.test_count() > 0)
        best = std::max(best, 1LL);
    return static_cast<int>(best);
}

int lb_configs(const Instance& inst)
{
    return lb_configs(inst, NeighborhoodTable(inst).min_active);
}

}  // namespace thermoplan
