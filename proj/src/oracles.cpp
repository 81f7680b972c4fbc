#include "thermoplan/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace thermoplan {

std::optional<int> oracle_switch(const SetVarBounds& bounds, const CardProfile& card,
                                 const std::vector<char>& must_visit)
{
    const int n = bounds.length();
    const int U = bounds.universe();
    if (n > 5 || U > 4)
        throw OracleGuardError("oracle_switch: needs length <= 5 and universe <= 4");
    if (n == 0)
        return std::nullopt;

    unsigned need = 0;
    for (int u = 0; u < U; ++u)
        if (u < static_cast<int>(must_visit.size()) && must_visit[u])
            need |= 1u << u;

    const unsigned full = 1u << U;
    auto allowed = [&](int pos, unsigned s) {
        const int size = std::popcount(s);
        if (size < card.min[pos] || size > card.max[pos])
            return false;
        for (int u = 0; u < U; ++u) {
            const bool in = (s >> u) & 1u;
            if (in && !bounds.possible(pos, u))
                return false;
            if (!in && bounds.required(pos, u))
                return false;
        }
        return true;
    };

    constexpr int inf = std::numeric_limits<int>::max();
    // cost[state][visited]
    std::vector<int> cost(full * full, inf), next(full * full, inf);
    for (unsigned s = 0; s < full; ++s)
        if (allowed(0, s))
            cost[s * full + s] = 0;
    for (int i = 1; i < n; ++i) {
        std::fill(next.begin(), next.end(), inf);
        for (unsigned s = 0; s < full; ++s)
            for (unsigned v = 0; v < full; ++v) {
                const int c = cost[s * full + v];
                if (c == inf)
                    continue;
                for (unsigned t = 0; t < full; ++t) {
                    if (!allowed(i, t))
                        continue;
                    const int step = c + std::popcount(t & ~s);
                    int& slot = next[t * full + (v | t)];
                    slot = std::min(slot, step);
                }
            }
        cost.swap(next);
    }
    int best = inf;
    for (unsigned s = 0; s < full; ++s)
        for (unsigned v = 0; v < full; ++v)
            if ((v & need) == need)
                best = std::min(best, cost[s * full + v]);
    if (best == inf)
        return std::nullopt;
    return best;
}

bool oracle_plan_fits(const Instance& inst)
{
    const int n = inst.test_count();
    const int m = inst.units;
    return (n <= 7 && m <= 8) || (n <= 8 && m <= 6);
}

namespace {

struct Partition {
    std::vector<int> group_of;    // test -> group
    std::vector<unsigned> needs;  // group -> required unit mask
};

struct OrderedBest {
    long long activations = std::numeric_limits<long long>::max();
    std::vector<int> order;        // position -> group
    std::vector<unsigned> states;  // position -> active mask
};

class PlanOracle {
public:
    explicit PlanOracle(const Instance& inst) : inst_(inst)
    {
        const int m = inst.units;
        for (unsigned s = 0; s < (1u << m); ++s) {
            bool ok = true;
            for (const auto& tc : inst.thermal) {
                int active = 0;
                for (int u : tc.scope)
                    active += (s >> u) & 1u;
                ok = ok && active == tc.capacity;
            }
            if (ok)
                states_.push_back(s);
        }
        for (const auto& e : inst.tests) {
            unsigned mask = 0;
            for (int u : e)
                mask |= 1u << u;
            test_mask_.push_back(mask);
        }
        tested_ = tested_unit_count(inst);
    }

    bool feasible_group(unsigned need) const
    {
        return std::any_of(states_.begin(), states_.end(),
                           [&](unsigned s) { return (s & need) == need; });
    }

    // All feasible set partitions of the tests, as restricted-growth strings.
    std::vector<Partition> partitions() const
    {
        std::vector<Partition> out;
        Partition cur;
        cur.group_of.assign(inst_.test_count(), -1);
        enumerate(0, cur, out);
        return out;
    }

    OrderedBest best_sequence(const std::vector<unsigned>& needs) const
    {
        const int k = static_cast<int>(needs.size());
        const int V = static_cast<int>(states_.size());
        const unsigned all = (1u << k) - 1;
        constexpr long long inf = std::numeric_limits<long long>::max() / 4;
        // dp[mask][state] with back pointers (previous state index, group).
        std::vector<long long> dp((std::size_t(1) << k) * V, inf);
        std::vector<int> from_state(dp.size(), -1), from_group(dp.size(), -1);
        auto at = [V](unsigned mask, int s) { return std::size_t(mask) * V + s; };

        for (int g = 0; g < k; ++g)
            for (int s = 0; s < V; ++s)
                if ((states_[s] & needs[g]) == needs[g]) {
                    const auto idx = at(1u << g, s);
                    const long long c = std::popcount(states_[s]);
                    if (c < dp[idx]) {
                        dp[idx] = c;
                        from_group[idx] = g;
                    }
                }
        for (unsigned mask = 1; mask <= all; ++mask)
            for (int s = 0; s < V; ++s) {
                const long long c = dp[at(mask, s)];
                if (c >= inf)
                    continue;
                for (int g = 0; g < k; ++g) {
                    if ((mask >> g) & 1u)
                        continue;
                    for (int t = 0; t < V; ++t) {
                        if ((states_[t] & needs[g]) != needs[g])
                            continue;
                        const long long step = c + std::popcount(states_[t] & ~states_[s]);
                        const auto idx = at(mask | (1u << g), t);
                        if (step < dp[idx]) {
                            dp[idx] = step;
                            from_state[idx] = s;
                            from_group[idx] = g;
                        }
                    }
                }
            }

        OrderedBest best;
        int end = -1;
        for (int s = 0; s < V; ++s)
            if (dp[at(all, s)] < best.activations) {
                best.activations = dp[at(all, s)];
                end = s;
            }
        if (end < 0)
            return best;
        unsigned mask = all;
        int s = end;
        while (mask) {
            const auto idx = at(mask, s);
            const int g = from_group[idx];
            best.order.push_back(g);
            best.states.push_back(states_[s]);
            mask &= ~(1u << g);
            s = from_state[idx];
        }
        std::reverse(best.order.begin(), best.order.end());
        std::reverse(best.states.begin(), best.states.end());
        return best;
    }

    Plan to_plan(const Partition& p, const OrderedBest& seq) const
    {
        const int k = static_cast<int>(seq.order.size());
        std::vector<int> position(k);
        for (int pos = 0; pos < k; ++pos)
            position[seq.order[pos]] = pos;
        Plan plan;
        for (int g : p.group_of)
            plan.allocation.push_back(position[g]);
        for (unsigned s : seq.states) {
            UnitSet a;
            for (int u = 0; u < inst_.units; ++u)
                if ((s >> u) & 1u)
                    a.push_back(u);
            plan.activity.push_back(std::move(a));
        }
        return plan;
    }

    int tested() const { return tested_; }

private:
    void enumerate(int t, Partition& cur, std::vector<Partition>& out) const
    {
        if (t == inst_.test_count()) {
            out.push_back(cur);
            return;
        }
        const int groups = static_cast<int>(cur.needs.size());
        for (int g = 0; g <= groups; ++g) {
            const unsigned before = g < groups ? cur.needs[g] : 0u;
            const unsigned after = before | test_mask_[t];
            if (!feasible_group(after))
                continue;
            if (g < groups)
                cur.needs[g] = after;
            else
                cur.needs.push_back(after);
            cur.group_of[t] = g;
            enumerate(t + 1, cur, out);
            if (g < groups)
                cur.needs[g] = before;
            else
                cur.needs.pop_back();
        }
        cur.group_of[t] = -1;
    }

    const Instance& inst_;
    std::vector<unsigned> states_;
    std::vector<unsigned> test_mask_;
    int tested_ = 0;
};

}  // namespace

OracleResult oracle_plan(const Instance& inst, std::optional<int> slots)
{
    if (!oracle_plan_fits(inst))
        throw OracleGuardError("oracle_plan: needs n <= 7 and m <= 8 (or n <= 8 and m <= 6)");
    OracleResult r;
    if (inst.test_count() == 0)
        return r;

    const PlanOracle oracle(inst);
    const auto parts = oracle.partitions();
    if (parts.empty())
        throw OracleGuardError("oracle_plan: instance has no feasible packing");

    int kmin = std::numeric_limits<int>::max();
    int kmax = 0;
    for (const auto& p : parts) {
        kmin = std::min<int>(kmin, static_cast<int>(p.needs.size()));
        kmax = std::max<int>(kmax, static_cast<int>(p.needs.size()));
    }

    // Best switch count for every configuration count, computed lazily.
    std::vector<std::optional<std::pair<long long, Plan>>> best_for(kmax + 1);
    auto solve_k = [&](int k) -> const std::optional<std::pair<long long, Plan>>& {
        auto& slot = best_for[k];
        if (slot)
            return slot;
        for (const auto& p : parts) {
            if (static_cast<int>(p.needs.size()) != k)
                continue;
            const auto seq = oracle.best_sequence(p.needs);
            if (seq.order.empty())
                continue;
            const long long z = seq.activations - oracle.tested();
            if (!slot || z < slot->first)
                slot = std::make_pair(z, oracle.to_plan(p, seq));
        }
        return slot;
    };

    const auto& lex = solve_k(kmin);
    r.configurations = kmin;
    r.switches = lex->first;
    r.plan = lex->second;

    const long long weight = configuration_weight(inst.units, slots.value_or(inst.test_count()));
    r.weighted = weight * kmin + r.switches;
    r.weighted_configurations = kmin;
    r.weighted_switches = r.switches;
    r.weighted_plan = r.plan;
    for (int k = kmin + 1; k <= kmax && weight * k < r.weighted; ++k) {
        const auto& cand = solve_k(k);
        if (cand && weight * k + cand->first < r.weighted) {
            r.weighted = weight * k + cand->first;
            r.weighted_configurations = k;
            r.weighted_switches = cand->first;
            r.weighted_plan = cand->second;
        }
    }
    return r;
}

}  // namespace thermoplan
