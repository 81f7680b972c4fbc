#include "thermoplan/switch_engine.hpp"

#include <algorithm>
#include <numeric>

namespace thermoplan {

int SetVarBounds::required_count(int pos) const
{
    int n = 0;
    for (int u = 0; u < universe_; ++u)
        n += required(pos, u);
    return n;
}

int SetVarBounds::possible_count(int pos) const
{
    int n = 0;
    for (int u = 0; u < universe_; ++u)
        n += possible(pos, u);
    return n;
}

namespace {

// Next-occurrence tables, rebuilt per call: next_lb[pos][item], next_ub[pos][item].
struct HorizonTable {
    int length;
    int universe;
    std::vector<int> next_lb;
    std::vector<int> next_ub;

    explicit HorizonTable(const SetVarBounds& b)
        : length(b.length()), universe(b.universe()),
          next_lb(static_cast<std::size_t>(b.length() + 1) * b.universe()),
          next_ub(static_cast<std::size_t>(b.length() + 1) * b.universe())
    {
        for (int u = 0; u < universe; ++u) {
            next_lb[at(length, u)] = length + 1;
            next_ub[at(length, u)] = length;
        }
        for (int i = length - 1; i >= 0; --i)
            for (int u = 0; u < universe; ++u) {
                next_lb[at(i, u)] = b.required(i, u) ? i : next_lb[at(i + 1, u)];
                next_ub[at(i, u)] = !b.possible(i, u) ? i : next_ub[at(i + 1, u)];
            }
    }

    std::size_t at(int pos, int item) const
    {
        return static_cast<std::size_t>(pos) * universe + item;
    }
    int lb(int pos, int item) const { return next_lb[at(pos, item)]; }
    int ub(int pos, int item) const { return next_ub[at(pos, item)]; }

    // u1 < u2 by index; true iff u1 has priority.
    bool ordered_precedes(int u1, int u2, int pos) const
    {
        const int l1 = lb(pos, u1), l2 = lb(pos, u2);
        const int x1 = ub(pos, u1), x2 = ub(pos, u2);
        return (l1 < x1 && l1 <= l2) || (l2 > x2 && x1 >= x2);
    }

    bool precedes(int a, int b, int pos) const
    {
        return a < b ? ordered_precedes(a, b, pos) : !ordered_precedes(b, a, pos);
    }
};

// Orders `items` by decreasing priority at `pos`. The relation is total and
// antisymmetric but not guaranteed transitive, so items are ranked by how many
// of the others they precede (ties by index); for a transitive relation this
// is exactly the sorted order.
void rank_by_priority(std::vector<int>& items, int pos, const HorizonTable& h)
{
    const std::size_t k = items.size();
    std::vector<int> wins(k, 0);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x + 1; y < k; ++y) {
            if (h.precedes(items[x], items[y], pos))
                ++wins[x];
            else
                ++wins[y];
        }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (wins[a] != wins[b])
            return wins[a] > wins[b];
        return items[a] < items[b];
    });
    std::vector<int> sorted(k);
    for (std::size_t r = 0; r < k; ++r)
        sorted[r] = items[order[r]];
    items.swap(sorted);
}

void collect_stretches(const SetVarBounds& b, SwitchSupport& s)
{
    const int n = b.length();
    const int U = b.universe();
    std::vector<std::vector<char>> on(n, std::vector<char>(U, 0));
    for (int i = 0; i < n; ++i)
        for (int u : s.sequence[i])
            on[i][u] = 1;

    s.visited.assign(U, 0);
    s.optional_item.assign(U, 0);
    std::vector<char> ever_required(U, 0);
    for (int u = 0; u < U; ++u)
        for (int i = 0; i < n; ++i)
            ever_required[u] |= b.required(i, u);

    for (int u = 0; u < U; ++u) {
        int i = 0;
        while (i < n) {
            if (!on[i][u]) {
                ++i;
                continue;
            }
            Stretch st{u, i, i, true};
            while (st.end + 1 < n && on[st.end + 1][u])
                ++st.end;
            for (int p = st.start; p <= st.end; ++p)
                if (b.required(p, u))
                    st.optional = false;
            s.optional_stretches += st.optional;
            s.stretches.push_back(st);
            s.visited[u] = 1;
            i = st.end + 1;
        }
        if (s.visited[u] && !ever_required[u]) {
            s.optional_item[u] = 1;
            ++s.optional_items;
        }
    }
}

bool is_regular(const CardProfile& card)
{
    int k = -1;
    for (int i = 0; i < card.length(); ++i) {
        if (card.max[i] == 0)
            continue;
        if (card.min[i] != 0 && card.min[i] != card.max[i])
            return false;
        if (k < 0)
            k = card.max[i];
        else if (k != card.max[i])
            return false;
    }
    return true;
}

}  // namespace

Horizon horizon_indices(int item, int pos, const SetVarBounds& bounds)
{
    Horizon h{bounds.length() + 1, bounds.length()};
    for (int i = bounds.length() - 1; i >= pos; --i) {
        if (bounds.required(i, item))
            h.next_required = i;
        if (!bounds.possible(i, item))
            h.next_excluded = i;
    }
    return h;
}

bool precedes(int a, int b, int pos, const SetVarBounds& bounds)
{
    const Horizon ha = horizon_indices(a, pos, bounds);
    const Horizon hb = horizon_indices(b, pos, bounds);
    auto ordered = [](const Horizon& h1, const Horizon& h2) {
        return (h1.next_required < h1.next_excluded && h1.next_required <= h2.next_required) ||
               (h2.next_required > h2.next_excluded && h1.next_excluded >= h2.next_excluded);
    };
    return a < b ? ordered(ha, hb) : !ordered(hb, ha);
}

SupportResult find_support(const SetVarBounds& bounds, const CardProfile& card)
{
    const int n = bounds.length();
    const int U = bounds.universe();
    for (int i = 0; i < n; ++i) {
        bool lb_outside_ub = false;
        for (int u = 0; u < U; ++u)
            lb_outside_ub |= bounds.required(i, u) && !bounds.possible(i, u);
        if (lb_outside_ub || bounds.required_count(i) > card.max[i] ||
            bounds.possible_count(i) < card.min[i])
            return {std::nullopt, SupportFailure{i}};
    }

    const HorizonTable h(bounds);
    SwitchSupport s;
    s.sequence.resize(n);
    std::vector<char> prev(U, 0), cur(U, 0);
    std::vector<int> candidates;
    for (int i = 0; i < n; ++i) {
        int size = 0;
        for (int u = 0; u < U; ++u) {
            cur[u] = bounds.required(i, u) || (prev[u] && bounds.possible(i, u));
            size += cur[u];
        }
        if (size > card.max[i]) {
            candidates.clear();
            for (int u = 0; u < U; ++u)
                if (cur[u] && !bounds.required(i, u))
                    candidates.push_back(u);
            rank_by_priority(candidates, i, h);
            for (int k = 0; k < size - card.max[i]; ++k)
                cur[candidates[candidates.size() - 1 - k]] = 0;
        } else {
            // The first buffer is not charged, so it is filled as far as
            // allowed; later positions only pad up to the minimum.
            const int target = i == 0 ? card.max[i] : card.min[i];
            if (size < target) {
                candidates.clear();
                for (int u = 0; u < U; ++u)
                    if (!cur[u] && bounds.possible(i, u))
                        candidates.push_back(u);
                rank_by_priority(candidates, i, h);
                const int add = std::min<int>(target - size, static_cast<int>(candidates.size()));
                for (int k = 0; k < add; ++k)
                    cur[candidates[k]] = 1;
            }
        }
        for (int u = 0; u < U; ++u) {
            if (cur[u])
                s.sequence[i].push_back(u);
            if (i > 0) {
                s.switches += cur[u] && !prev[u];
                s.removals += prev[u] && !cur[u];
            }
        }
        prev.swap(cur);
    }
    collect_stretches(bounds, s);
    s.regular_profile = is_regular(card);
    return {std::move(s), std::nullopt};
}

int lb_switch_plus(const SwitchSupport& support, const std::vector<char>& must_visit)
{
    int missing = 0;
    int optional_needed = 0;
    for (std::size_t u = 0; u < must_visit.size(); ++u) {
        if (!must_visit[u])
            continue;
        if (!support.visited[u])
            ++missing;
        else if (support.optional_item[u])
            ++optional_needed;
    }
    if (missing == 0 || !support.regular_profile)
        return support.switches;
    // Only optional items that must themselves stay visited keep their
    // stretch; the others may be dropped in favour of a missing item.
    const int bound = support.switches + missing - support.optional_stretches + optional_needed;
    return std::max(support.switches, bound);
}

int lb_switch_plus(const SetVarBounds& bounds, const CardProfile& card,
                   const std::vector<char>& must_visit)
{
    auto r = find_support(bounds, card);
    return r ? lb_switch_plus(*r.support, must_visit) : 0;
}

SwitchFilter filter_switch(const SetVarBounds& bounds, const CardProfile& card, int z_min,
                           int z_max, const std::vector<char>& must_visit)
{
    for (int u = 0; u < bounds.universe(); ++u) {
        if (u >= static_cast<int>(must_visit.size()) || !must_visit[u])
            continue;
        bool ever = false;
        for (int i = 0; i < bounds.length() && !ever; ++i)
            ever = bounds.possible(i, u);
        if (!ever)
            return {z_min, true};
    }
    auto r = find_support(bounds, card);
    if (!r)
        return {z_min, true};
    const int lb = lb_switch_plus(*r.support, must_visit);
    const int z = std::max(z_min, lb);
    return {z, z > z_max};
}

int sequence_switches(const std::vector<std::vector<int>>& sequence)
{
    int total = 0;
    for (std::size_t i = 1; i < sequence.size(); ++i)
        for (int u : sequence[i])
            if (!std::binary_search(sequence[i - 1].begin(), sequence[i - 1].end(), u))
                ++total;
    return total;
}

}  // namespace thermoplan
