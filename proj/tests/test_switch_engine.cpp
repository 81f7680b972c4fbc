#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "thermoplan/oracles.hpp"
#include "thermoplan/switch_engine.hpp"

using namespace thermoplan;

namespace {

// Items a, b, c = 0, 1, 2.
SetVarBounds make_bounds(int universe, const std::vector<std::vector<int>>& lower,
                         const std::vector<std::vector<int>>& upper = {})
{
    SetVarBounds b(static_cast<int>(lower.size()), universe);
    for (int i = 0; i < b.length(); ++i) {
        for (int u : lower[i])
            b.set_required(i, u);
        if (!upper.empty()) {
            for (int u = 0; u < universe; ++u)
                b.set_possible(i, u, false);
            for (int u : upper[i])
                b.set_possible(i, u);
        }
    }
    return b;
}

struct RandomCase {
    SetVarBounds bounds;
    CardProfile card;
};

RandomCase random_case(std::mt19937_64& rng, int max_len, int max_universe)
{
    std::uniform_int_distribution<int> len_d(1, max_len), uni_d(1, max_universe);
    const int n = len_d(rng);
    const int U = uni_d(rng);
    RandomCase rc{SetVarBounds(n, U), {}};
    std::uniform_int_distribution<int> state(0, 5);
    for (int i = 0; i < n; ++i) {
        for (int u = 0; u < U; ++u) {
            const int s = state(rng);  // 0: excluded, 1: required, else free
            rc.bounds.set_possible(i, u, s != 0);
            rc.bounds.set_required(i, u, s == 1);
        }
        std::uniform_int_distribution<int> lo_d(0, U);
        int lo = lo_d(rng), hi = lo_d(rng);
        if (lo > hi)
            std::swap(lo, hi);
        rc.card.min.push_back(lo);
        rc.card.max.push_back(hi);
    }
    return rc;
}

std::vector<char> mask_to_items(unsigned mask, int U)
{
    std::vector<char> v(U, 0);
    for (int u = 0; u < U; ++u)
        v[u] = (mask >> u) & 1u;
    return v;
}

}  // namespace

TEST(Horizon, RequiredAgainAtThirdPosition)
{
    const auto b = make_bounds(2, {{0}, {}, {0}});
    // one-based (3, 4) for pos 2 of 3
    const auto h = horizon_indices(0, 1, b);
    EXPECT_EQ(h.next_required, 2);
    EXPECT_EQ(h.next_excluded, 3);
}

TEST(Horizon, SentinelsWhenNeverRequiredNorExcluded)
{
    const auto b = make_bounds(2, {{}, {}, {}});
    const auto h = horizon_indices(1, 0, b);
    EXPECT_EQ(h.next_required, 4);  // length + 1
    EXPECT_EQ(h.next_excluded, 3);  // length
}

TEST(Horizon, ExcludedAtSecondPosition)
{
    const auto b = make_bounds(2, {{}, {}}, {{0, 1}, {0}});
    EXPECT_EQ(horizon_indices(1, 0, b).next_excluded, 1);
}

TEST(Precedes, RequiredSoonerWins)
{
    // a required at 1, b required at 2, neither excluded.
    const auto b = make_bounds(2, {{}, {0}, {1}});
    EXPECT_TRUE(precedes(0, 1, 0, b));
    EXPECT_FALSE(precedes(1, 0, 0, b));
    // and symmetric with roles swapped by index
    const auto b2 = make_bounds(2, {{}, {1}, {0}});
    EXPECT_TRUE(precedes(1, 0, 0, b2));
}

TEST(Precedes, UselessItemLoses)
{
    // b excluded at 1 before ever required; a never excluded.
    const auto b = make_bounds(2, {{}, {}, {}}, {{0, 1}, {0}, {0}});
    EXPECT_TRUE(precedes(0, 1, 0, b));
}

TEST(Precedes, AllSentinelsFallBackToIndex)
{
    const auto b = make_bounds(3, {{}, {}});
    EXPECT_TRUE(precedes(0, 1, 0, b));
    EXPECT_TRUE(precedes(1, 2, 0, b));
    EXPECT_FALSE(precedes(2, 0, 0, b));
}

TEST(Precedes, TotalAndAntisymmetricOnRandomBounds)
{
    std::mt19937_64 rng(7);
    int intransitive = 0;
    for (int rep = 0; rep < 3000; ++rep) {
        auto rc = random_case(rng, 5, 4);
        const int U = rc.bounds.universe();
        for (int pos = 0; pos < rc.bounds.length(); ++pos) {
            for (int a = 0; a < U; ++a)
                for (int b = 0; b < U; ++b)
                    if (a != b)
                        ASSERT_NE(precedes(a, b, pos, rc.bounds), precedes(b, a, pos, rc.bounds));
            for (int a = 0; a < U; ++a)
                for (int b = 0; b < U; ++b)
                    for (int c = 0; c < U; ++c)
                        if (a != b && b != c && a != c && precedes(a, b, pos, rc.bounds) &&
                            precedes(b, c, pos, rc.bounds) && !precedes(a, c, pos, rc.bounds))
                            ++intransitive;
        }
    }
    RecordProperty("intransitive_triples", intransitive);
    std::cout << "[ info ] intransitive priority triples observed: " << intransitive << "\n";
}

TEST(FindSupport, KeepsRequiredItemThroughGap)
{
    const auto b = make_bounds(2, {{0}, {}, {0}});
    const auto r = find_support(b, CardProfile::constant(3, 1, 1));
    ASSERT_TRUE(r);
    const auto& s = *r.support;
    EXPECT_EQ(s.sequence, (std::vector<std::vector<int>>{{0}, {0}, {0}}));
    EXPECT_EQ(s.switches, 0);
    EXPECT_EQ(s.optional_stretches, 0);
    EXPECT_EQ(s.optional_items, 0);
}

TEST(FindSupport, FillerStretchIsOptional)
{
    const auto b = make_bounds(3, {{0}, {0}});
    const auto r = find_support(b, CardProfile::constant(2, 2, 2));
    ASSERT_TRUE(r);
    const auto& s = *r.support;
    EXPECT_EQ(s.switches, 0);
    EXPECT_EQ(s.optional_stretches, 1);
    EXPECT_EQ(s.optional_items, 1);
    ASSERT_EQ(s.stretches.size(), 2u);
    EXPECT_FALSE(s.stretches[0].optional);
    EXPECT_EQ(s.stretches[0].item, 0);
}

TEST(FindSupport, ForcedChange)
{
    const auto b = make_bounds(2, {{0}, {1}});
    const auto r = find_support(b, CardProfile::constant(2, 1, 1));
    ASSERT_TRUE(r);
    EXPECT_EQ(r.support->sequence, (std::vector<std::vector<int>>{{0}, {1}}));
    EXPECT_EQ(r.support->switches, 1);
}

TEST(FindSupport, ReportsInfeasiblePosition)
{
    const auto b = make_bounds(3, {{0}, {0, 1}});
    const auto r = find_support(b, CardProfile::constant(2, 1, 1));
    ASSERT_FALSE(r);
    EXPECT_EQ(r.failure->position, 1);
}

TEST(FindSupport, StretchCountMatchesFinalCardinalityPlusRemovals)
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5000; ++rep) {
        auto rc = random_case(rng, 6, 5);
        const auto r = find_support(rc.bounds, rc.card);
        if (!r)
            continue;
        const auto& s = *r.support;
        EXPECT_EQ(static_cast<int>(s.stretches.size()),
                  static_cast<int>(s.sequence.back().size()) + s.removals);
        EXPECT_LE(s.optional_items, s.optional_stretches);
        EXPECT_EQ(sequence_switches(s.sequence), s.switches);
    }
}

TEST(FindSupport, MatchesBruteForceOnRandomSmallBounds)
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int rep = 0; rep < 20000; ++rep) {
        auto rc = random_case(rng, 5, 4);
        const auto r = find_support(rc.bounds, rc.card);
        const auto best = oracle_switch(rc.bounds, rc.card, {});
        ASSERT_EQ(r.support.has_value(), best.has_value());
        if (!best)
            continue;
        ++checked;
        const auto& s = *r.support;
        ASSERT_EQ(s.switches, *best);
        for (int i = 0; i < rc.bounds.length(); ++i) {
            const int size = static_cast<int>(s.sequence[i].size());
            ASSERT_GE(size, rc.card.min[i]);
            ASSERT_LE(size, rc.card.max[i]);
            for (int u = 0; u < rc.bounds.universe(); ++u) {
                const bool in = std::count(s.sequence[i].begin(), s.sequence[i].end(), u) > 0;
                ASSERT_TRUE(!rc.bounds.required(i, u) || in);
                ASSERT_TRUE(rc.bounds.possible(i, u) || !in);
            }
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(FindSupport, ExtraRequirementCanPullInAnotherItem)
{
    // Requiring c first evicts b, and the second position must then pad
    // with a (lower index wins among items with sentinel horizons).
    const auto b = make_bounds(3, {{}, {}}, {{1, 2}, {0, 1}});
    const auto card = CardProfile::constant(2, 1, 1);
    const auto base = find_support(b, card);
    ASSERT_TRUE(base);
    EXPECT_EQ(base.support->sequence, (std::vector<std::vector<int>>{{1}, {1}}));
    SetVarBounds more = b;
    more.set_required(0, 2);
    const auto r = find_support(more, card);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.support->sequence, (std::vector<std::vector<int>>{{2}, {0}}));
}

TEST(FindSupport, RequiringUnvisitedItemAddsNonOptionalStretch)
{
    auto non_optional = [](const SwitchSupport& s) {
        return std::count_if(s.stretches.begin(), s.stretches.end(),
                             [](const Stretch& st) { return !st.optional; });
    };
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int rep = 0; rep < 20000; ++rep) {
        auto rc = random_case(rng, 5, 4);
        const auto base = find_support(rc.bounds, rc.card);
        if (!base || !base.support->regular_profile)
            continue;
        for (int i = 0; i < rc.bounds.length(); ++i)
            for (int u = 0; u < rc.bounds.universe(); ++u) {
                if (base.support->visited[u] || !rc.bounds.possible(i, u))
                    continue;
                SetVarBounds more = rc.bounds;
                more.set_required(i, u);
                const auto r = find_support(more, rc.card);
                if (!r)
                    continue;
                ++checked;
                ASSERT_GE(non_optional(*r.support), non_optional(*base.support) + 1);
                ASSERT_GE(r.support->switches, base.support->switches);
            }
    }
    EXPECT_GT(checked, 200);
}

TEST(SwitchPlus, BoundExceedsPlainSupport)
{
    const auto b = make_bounds(2, {{0}, {}, {0}});
    const auto card = CardProfile::constant(3, 1, 1);
    EXPECT_EQ(lb_switch_plus(b, card, {1, 1}), 1);
    EXPECT_EQ(oracle_switch(b, card, {1, 1}), 2);
}

TEST(SwitchPlus, TightWhenOptionalItemMustStay)
{
    const auto b = make_bounds(3, {{0}, {0}});
    const auto card = CardProfile::constant(2, 2, 2);
    EXPECT_EQ(lb_switch_plus(b, card, {1, 1, 1}), 1);
    EXPECT_EQ(oracle_switch(b, card, {1, 1, 1}), 1);
}

TEST(SwitchPlus, OptionalItemOutsideMustVisitCanBeReplaced)
{
    // The filler b need not be visited, so c can take its place for free.
    const auto b = make_bounds(3, {{0}, {0}});
    const auto card = CardProfile::constant(2, 2, 2);
    EXPECT_EQ(lb_switch_plus(b, card, {1, 0, 1}), 0);
    EXPECT_EQ(oracle_switch(b, card, {1, 0, 1}), 0);
}

TEST(SwitchPlus, NothingMissingKeepsPlainBound)
{
    const auto b = make_bounds(2, {{0}, {1}});
    const auto card = CardProfile::constant(2, 1, 1);
    EXPECT_EQ(lb_switch_plus(b, card, {1, 1}), 1);
}

TEST(SwitchPlus, SoundAndNeverBelowPlainBoundOnRandomBounds)
{
    std::mt19937_64 rng(99);
    int strict = 0;
    for (int rep = 0; rep < 8000; ++rep) {
        auto rc = random_case(rng, 5, 4);
        const auto r = find_support(rc.bounds, rc.card);
        if (!r)
            continue;
        const int U = rc.bounds.universe();
        for (unsigned mask = 0; mask < (1u << U); ++mask) {
            const auto must = mask_to_items(mask, U);
            const auto best = oracle_switch(rc.bounds, rc.card, must);
            const int lb = lb_switch_plus(*r.support, must);
            ASSERT_GE(lb, r.support->switches);
            if (best)
                ASSERT_LE(lb, *best) << "rep " << rep << " mask " << mask;
            strict += lb > r.support->switches;
        }
    }
    EXPECT_GT(strict, 0);
}

TEST(FilterSwitch, FailsWhenBoundExceedsMax)
{
    const auto b = make_bounds(2, {{0}, {}, {0}});
    const auto card = CardProfile::constant(3, 1, 1);
    EXPECT_TRUE(filter_switch(b, card, 0, 0, {1, 1}).fail);
    const auto f = filter_switch(b, card, 0, 2, {1, 1});
    EXPECT_FALSE(f.fail);
    EXPECT_EQ(f.z_min, 1);
}

TEST(FilterSwitch, GroundBoundsGiveExactCount)
{
    const auto b = make_bounds(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}, {0, 2}});
    const auto f = filter_switch(b, CardProfile::constant(3, 2, 2), 0, 10, {1, 1, 1});
    EXPECT_FALSE(f.fail);
    EXPECT_EQ(f.z_min, 2);
}

TEST(FilterSwitch, UnbufferableMustVisitItemFails)
{
    const auto b = make_bounds(2, {{0}, {0}}, {{0}, {0}});
    EXPECT_TRUE(filter_switch(b, CardProfile::constant(2, 1, 1), 0, 10, {1, 1}).fail);
}

TEST(OracleSwitch, GuardsAreHardFailures)
{
    SetVarBounds big(6, 2);
    EXPECT_THROW(oracle_switch(big, CardProfile::constant(6, 0, 2), {}), OracleGuardError);
}

TEST(OracleSwitch, InfeasibleProfileHasNoValue)
{
    const auto b = make_bounds(2, {{0, 1}});
    EXPECT_FALSE(oracle_switch(b, CardProfile::constant(1, 1, 1), {}).has_value());
}
