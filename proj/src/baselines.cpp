#include "thermoplan/baselines.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace thermoplan {

namespace {

// Depth-first fill over units in ascending order; `count` tracks active
// units per constraint.
bool fill(const Instance& inst, const std::vector<std::vector<int>>& constraints_of,
          std::vector<char>& active, std::vector<int>& count, int unit)
{
    const int m = inst.units;
    if (unit == m) {
        for (int c = 0; c < inst.constraint_count(); ++c)
            if (count[c] != inst.thermal[c].capacity)
                return false;
        return true;
    }
    // Remaining room check: every constraint must still be reachable.
    for (int c = 0; c < inst.constraint_count(); ++c) {
        if (count[c] > inst.thermal[c].capacity)
            return false;
        int room = 0;
        for (int u : inst.thermal[c].scope)
            room += u >= unit && !active[u];
        if (count[c] + room < inst.thermal[c].capacity)
            return false;
    }
    if (active[unit])
        return fill(inst, constraints_of, active, count, unit + 1);
    if (!constraints_of[unit].empty()) {
        active[unit] = 1;
        for (int c : constraints_of[unit])
            ++count[c];
        if (fill(inst, constraints_of, active, count, unit + 1))
            return true;
        active[unit] = 0;
        for (int c : constraints_of[unit])
            --count[c];
    }
    return fill(inst, constraints_of, active, count, unit + 1);
}

}  // namespace

std::optional<UnitSet> complete_activity(const Instance& inst, const UnitSet& required)
{
    std::vector<std::vector<int>> constraints_of(inst.units);
    for (int c = 0; c < inst.constraint_count(); ++c)
        for (int u : inst.thermal[c].scope)
            constraints_of[u].push_back(c);
    std::vector<char> active(inst.units, 0);
    std::vector<int> count(inst.constraint_count(), 0);
    for (int u : required) {
        active[u] = 1;
        for (int c : constraints_of[u])
            ++count[c];
    }
    if (!fill(inst, constraints_of, active, count, 0))
        return std::nullopt;
    UnitSet out;
    for (int u = 0; u < inst.units; ++u)
        if (active[u])
            out.push_back(u);
    return out;
}

Plan first_fit_pack(const Instance& inst)
{
    Plan plan;
    plan.allocation.assign(inst.test_count(), -1);
    std::vector<UnitSet> required;
    for (int t = 0; t < inst.test_count(); ++t) {
        const UnitSet& units = inst.tests[t];
        int chosen = -1;
        for (int k = 0; k < static_cast<int>(required.size()) && chosen < 0; ++k) {
            UnitSet merged;
            std::set_union(required[k].begin(), required[k].end(), units.begin(), units.end(),
                           std::back_inserter(merged));
            if (complete_activity(inst, merged)) {
                required[k] = std::move(merged);
                chosen = k;
            }
        }
        if (chosen < 0) {
            if (!complete_activity(inst, units))
                throw std::runtime_error("test " + std::to_string(t + 1) +
                                         " fits in no configuration");
            required.push_back(units);
            chosen = static_cast<int>(required.size()) - 1;
        }
        plan.allocation[t] = chosen;
    }
    for (const UnitSet& r : required)
        plan.activity.push_back(*complete_activity(inst, r));
    return plan;
}

int hamming(const UnitSet& a, const UnitSet& b)
{
    UnitSet diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    return static_cast<int>(diff.size());
}

namespace {

long long path_cost(const std::vector<UnitSet>& configs, const std::vector<int>& order)
{
    if (order.empty())
        return 0;
    long long cost = static_cast<long long>(configs[order[0]].size());
    for (std::size_t k = 1; k < order.size(); ++k)
        cost += hamming(configs[order[k - 1]], configs[order[k]]);
    return cost;
}

TspResult held_karp(const std::vector<UnitSet>& configs)
{
    const int k = static_cast<int>(configs.size());
    const long long inf = std::numeric_limits<long long>::max() / 4;
    const std::size_t states = std::size_t{1} << k;
    std::vector<std::vector<int>> dist(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            dist[a][b] = hamming(configs[a], configs[b]);
    std::vector<long long> best(states * k, inf);
    std::vector<int> parent(states * k, -1);
    for (int a = 0; a < k; ++a)
        best[(std::size_t{1} << a) * k + a] = static_cast<long long>(configs[a].size());
    for (std::size_t mask = 1; mask < states; ++mask)
        for (int last = 0; last < k; ++last) {
            const long long here = best[mask * k + last];
            if (here >= inf || !(mask >> last & 1))
                continue;
            for (int next = 0; next < k; ++next) {
                if (mask >> next & 1)
                    continue;
                const std::size_t to = (mask | std::size_t{1} << next) * k + next;
                const long long cost = here + dist[last][next];
                if (cost < best[to]) {
                    best[to] = cost;
                    parent[to] = last;
                }
            }
        }
    const std::size_t full = states - 1;
    int last = 0;
    for (int a = 1; a < k; ++a)
        if (best[full * k + a] < best[full * k + last])
            last = a;
    TspResult r;
    r.cost = best[full * k + last];
    r.exact = true;
    std::size_t mask = full;
    while (last >= 0) {
        r.order.push_back(last);
        const int prev = parent[mask * k + last];
        mask &= ~(std::size_t{1} << last);
        last = prev;
    }
    std::reverse(r.order.begin(), r.order.end());
    return r;
}

TspResult nearest_then_two_opt(const std::vector<UnitSet>& configs)
{
    const int k = static_cast<int>(configs.size());
    std::vector<char> used(k, 0);
    std::vector<int> order;
    const UnitSet empty;
    const UnitSet* at = &empty;
    for (int step = 0; step < k; ++step) {
        int pick = -1, best = 0;
        for (int a = 0; a < k; ++a) {
            if (used[a])
                continue;
            const int d = hamming(*at, configs[a]);
            if (pick < 0 || d < best) {
                pick = a;
                best = d;
            }
        }
        used[pick] = 1;
        order.push_back(pick);
        at = &configs[pick];
    }
    // 2-opt on the open path; the start is the fixed all-off node.
    auto edge = [&](int from, int to) {
        return from < 0 ? static_cast<int>(configs[order[to]].size())
                        : hamming(configs[order[from]], configs[order[to]]);
    };
    for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const int before_i = edge(i - 1, i) + (j + 1 < k ? edge(j, j + 1) : 0);
                const int first = i == 0 ? static_cast<int>(configs[order[j]].size())
                                         : hamming(configs[order[i - 1]], configs[order[j]]);
                const int after = first + (j + 1 < k ? hamming(configs[order[i]], configs[order[j + 1]]) : 0);
                if (after < before_i) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    improved = true;
                }
            }
    }
    TspResult r;
    r.order = std::move(order);
    r.cost = path_cost(configs, r.order);
    r.exact = k <= 1;
    return r;
}

}  // namespace

TspResult tsp_sequence(const std::vector<UnitSet>& configs, int exact_limit)
{
    exact_limit = std::min(exact_limit, 20);
    if (configs.empty())
        return {{}, 0, true};
    if (static_cast<int>(configs.size()) <= exact_limit)
        return held_karp(configs);
    return nearest_then_two_opt(configs);
}

Plan reorder(const Plan& plan, const std::vector<int>& order)
{
    Plan out;
    std::vector<int> position(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = static_cast<int>(k);
        out.activity.push_back(plan.activity[order[k]]);
    }
    for (int a : plan.allocation)
        out.allocation.push_back(position[a]);
    return out;
}

Plan packing_then_tsp(const Instance& inst)
{
    const Plan packed = first_fit_pack(inst);
    return reorder(packed, tsp_sequence(packed.activity).order);
}

}  // namespace thermoplan
