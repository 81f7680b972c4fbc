#include <gtest/gtest.h>

#include <random>

#include "thermoplan/generator.hpp"
#include "thermoplan/oracles.hpp"
#include "thermoplan/packing_bounds.hpp"
#include "thermoplan/solver.hpp"
#include "thermoplan/strategy.hpp"

using namespace thermoplan;

namespace {

SolveOptions with(Variant v, ObjectiveMode mode, Heuristic h)
{
    SolveOptions o;
    o.model.variant = v;
    o.model.mode = mode;
    o.heuristic = h;
    o.budget.seconds = 10;
    return o;
}

// Small random instances, sometimes with overlapping scopes.
Instance random_instance(std::mt19937_64& rng)
{
    for (;;) {
        Instance inst;
        inst.units = 3 + static_cast<int>(rng() % 5);
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % 2);
        for (int c = 0; c < k; ++c) {
            ThermalConstraint tc;
            for (int u = 0; u < inst.units; ++u)
                if (rng() % 2)
                    tc.scope.push_back(u);
            if (tc.scope.size() < 2)
                continue;
            tc.capacity = 1 + static_cast<int>(rng() % (tc.scope.size() - 1));
            inst.thermal.push_back(tc);
        }
        for (int t = 0; t < n; ++t) {
            UnitSet s;
            for (int u = 0; u < inst.units; ++u)
                if (rng() % 4 == 0)
                    s.push_back(u);
            if (s.empty())
                s.push_back(static_cast<int>(rng() % inst.units));
            inst.tests.push_back(s);
        }
        if (!has_errors(validate(inst)) && oracle_plan_fits(inst))
            return inst;
    }
}

}  // namespace

TEST(Solve, Fig1IsOptimalEverywhere)
{
    const Instance inst = fig1_instance();
    for (Variant v : {Variant::Base, Variant::Bounded})
        for (ObjectiveMode mode : {ObjectiveMode::Weighted, ObjectiveMode::Lexicographic})
            for (Heuristic h : {Heuristic::Impact, Heuristic::Wdeg, Heuristic::Lex}) {
                const SolveOutcome r = solve(inst, with(v, mode, h));
                ASSERT_EQ(r.status, Status::Optimal) << to_string(v) << ' ' << to_string(h);
                ASSERT_TRUE(r.plan);
                EXPECT_TRUE(verify(inst, *r.plan).empty());
                EXPECT_EQ(r.value->configurations, 2);
                EXPECT_EQ(r.value->switches, 0);
                EXPECT_EQ(r.bounds.configurations_lo, 2);
            }
}

TEST(Solve, WithoutSwitchPlusStillOptimal)
{
    SolveOptions o = with(Variant::Bounded, ObjectiveMode::Weighted, Heuristic::Impact);
    o.model.switch_plus = false;
    const SolveOutcome r = solve(fig1_instance(), o);
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.value->weighted, 2 * configuration_weight(6, 8));
}

TEST(Solve, TestBeyondCapacityIsInfeasible)
{
    // Bypasses validation on purpose.
    Instance inst;
    inst.units = 3;
    inst.tests = {{0, 1, 2}, {0}};
    inst.thermal = {{{0, 1, 2}, 2}};
    const SolveOutcome r = solve(inst, {});
    EXPECT_EQ(r.status, Status::Infeasible);
    EXPECT_FALSE(r.plan);
}

TEST(Solve, EmptyInstanceIsTriviallyOptimal)
{
    Instance inst;
    inst.units = 2;
    inst.thermal = {{{0, 1}, 1}};
    const SolveOutcome r = solve(inst, {});
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.value->configurations, 0);
}

TEST(Solve, IncumbentOnlyAdmitsBetterPlans)
{
    const Instance inst = fig1_instance();
    SolveOptions o;
    o.incumbent = fig1_plan_two_configs();
    const SolveOutcome r = solve(inst, o);
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.stats.solutions, 0);
    EXPECT_EQ(*r.plan, fig1_plan_two_configs());
}

TEST(Solve, NodeBudgetGivesIdenticalRuns)
{
    const Instance inst = generate(30, Phase::Cold, 2);
    SolveOptions o;
    o.budget.nodes = 3000;
    const SolveOutcome a = solve(inst, o);
    const SolveOutcome b = solve(inst, o);
    EXPECT_EQ(a.stats.nodes, b.stats.nodes);
    EXPECT_EQ(a.stats.fails, b.stats.fails);
    EXPECT_EQ(a.plan, b.plan);
    ASSERT_EQ(a.timeline.size(), b.timeline.size());
    for (std::size_t k = 0; k < a.timeline.size(); ++k)
        EXPECT_EQ(a.timeline[k].weighted, b.timeline[k].weighted);
}

TEST(Solve, MatchesOracleOnGeneratedFamily)
{
    std::mt19937_64 pick(5);
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 40; ++seed) {
        GeneratorParams p;
        p.tests = 4 + static_cast<int>(pick() % 4);
        p.constraints = 1 + static_cast<int>(pick() % 3);
        p.units = std::max(p.constraints * 2, 4 + static_cast<int>(pick() % 5));
        p.ratio = pick() % 2 ? 0.6 : 0.4;
        p.min_scopes = 1;
        p.max_scopes = std::min(2, p.constraints);
        p.seed = seed;
        const Instance inst = generate(p);
        if (!oracle_plan_fits(inst))
            continue;
        const OracleResult best = oracle_plan(inst);
        for (ObjectiveMode mode : {ObjectiveMode::Weighted, ObjectiveMode::Lexicographic}) {
            const SolveOutcome r = solve(inst, with(Variant::Bounded, mode, Heuristic::Impact));
            ASSERT_EQ(r.status, Status::Optimal) << "seed " << seed;
            if (mode == ObjectiveMode::Weighted) {
                EXPECT_EQ(r.value->weighted, best.weighted) << "seed " << seed;
            } else {
                EXPECT_EQ(r.value->configurations, best.configurations) << "seed " << seed;
                EXPECT_EQ(r.value->switches, best.switches) << "seed " << seed;
            }
        }
        ++checked;
    }
}

TEST(Solve, MatchesOracleWithOverlappingScopes)
{
    std::mt19937_64 rng(7);
    int overlap = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const Instance inst = random_instance(rng);
        OracleResult best;
        try {
            best = oracle_plan(inst);
        } catch (const OracleGuardError&) {
            EXPECT_EQ(solve(inst, {}).status, Status::Infeasible) << "rep " << rep;
            continue;
        }
        overlap += scopes_overlap(inst);
        for (Variant v : {Variant::Base, Variant::Bounded}) {
            const SolveOutcome w = solve(inst, with(v, ObjectiveMode::Weighted, Heuristic::Impact));
            ASSERT_EQ(w.status, Status::Optimal) << "rep " << rep;
            EXPECT_EQ(w.value->weighted, best.weighted) << "rep " << rep;
            const SolveOutcome l = solve(inst, with(v, ObjectiveMode::Lexicographic, Heuristic::Wdeg));
            ASSERT_EQ(l.status, Status::Optimal) << "rep " << rep;
            EXPECT_EQ(l.value->configurations, best.configurations) << "rep " << rep;
            EXPECT_EQ(l.value->switches, best.switches) << "rep " << rep;
        }
    }
    EXPECT_GT(overlap, 10);
}

TEST(SolvePacking, Fig1AndSingleTest)
{
    const Instance inst = fig1_instance();
    const SolveOutcome r = solve_packing(inst, {});
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.value->configurations, 2);
    EXPECT_TRUE(verify(inst, *r.plan).empty());

    const Instance one = restrict_tests(inst, {0});
    const SolveOutcome s = solve_packing(one, {});
    EXPECT_EQ(s.status, Status::Optimal);
    EXPECT_EQ(s.value->configurations, 1);
}

TEST(SolvePacking, GeneratedInstanceBetweenBoundAndGreedy)
{
    const Instance inst = generate(30, Phase::Cold, 1);
    const SolveOutcome greedy = greedy_descent(inst);
    SolveOptions o;
    o.budget.seconds = 5;
    const SolveOutcome r = solve_packing(inst, o);
    ASSERT_TRUE(r.plan);
    EXPECT_GE(r.value->configurations, lb_configs(inst));
    EXPECT_LE(r.value->configurations, greedy.value->configurations);
}

TEST(SolveSequencing, Fig1Packings)
{
    const Instance inst = fig1_instance();
    const SolveOutcome two = solve_sequencing(inst, fig1_plan_two_configs(), {});
    EXPECT_TRUE(two.exhausted);
    EXPECT_EQ(two.value->switches, 0);
    EXPECT_TRUE(two.switches_upper_only);
    EXPECT_NE(two.status, Status::Optimal);

    const SolveOutcome three = solve_sequencing(inst, fig1_plan_three_configs(), {});
    EXPECT_TRUE(three.exhausted);
    EXPECT_EQ(three.value->configurations, 3);
    EXPECT_EQ(three.value->switches, 2);
    EXPECT_EQ(three.plan->allocation.size(), inst.tests.size());
    EXPECT_TRUE(verify(inst, *three.plan).empty());
    EXPECT_EQ(three.bounds.switches_lo, 0);
}

TEST(SolveSequencing, SingleConfigurationHasNoSwitch)
{
    Instance inst;
    inst.units = 4;
    inst.tests = {{0}, {2}, {0, 3}};
    inst.thermal = {{{0, 1}, 1}, {{2, 3}, 2}};
    const Plan packing{{0, 0, 0}, {{0, 2, 3}}};
    ASSERT_TRUE(verify(inst, packing).empty());
    const SolveOutcome r = solve_sequencing(inst, packing, {});
    EXPECT_EQ(r.value->configurations, 1);
    EXPECT_EQ(r.value->switches, 0);
}

TEST(GroupedInstance, UnionOfUnitsPerConfiguration)
{
    const Instance g = grouped_instance(fig1_instance(), fig1_plan_three_configs());
    ASSERT_EQ(g.test_count(), 3);
    // tests {1,2} -> units {1,4} and {2,6}, one-based
    EXPECT_EQ(g.tests[0], (UnitSet{0, 1, 3, 5}));
}

TEST(Improves, ModesAndPacking)
{
    const ObjectiveValue a{2, 5, 53, 8}, b{3, 0, 72, 8}, c{2, 4, 52, 8};
    EXPECT_TRUE(improves(a, b, ObjectiveMode::Weighted));
    EXPECT_TRUE(improves(a, b, ObjectiveMode::Lexicographic));
    EXPECT_TRUE(improves(c, a, ObjectiveMode::Lexicographic));
    EXPECT_FALSE(improves(c, a, ObjectiveMode::Lexicographic, ModelKind::Packing));
    EXPECT_FALSE(improves(a, a, ObjectiveMode::Weighted));
}
