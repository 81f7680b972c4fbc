#include <gtest/gtest.h>

#include "thermoplan/model.hpp"
#include "thermoplan/plan.hpp"

using namespace thermoplan;

namespace {

ModelOptions bounded()
{
    return {};
}

ModelOptions base()
{
    ModelOptions o;
    o.variant = Variant::Base;
    return o;
}

Instance overlapping()
{
    Instance inst;
    inst.units = 4;
    inst.tests = {{0, 1}, {2}, {3}};
    inst.thermal = {{{0, 1, 2}, 2}, {{1, 2, 3}, 2}};
    return inst;
}

// Fixes allocation, activity and C to `plan`'s values.
bool ground(Model& m, const Plan& plan)
{
    Space& sp = m.space();
    const Instance& inst = m.instance();
    bool ok = sp.assign(m.configurations(), plan.configuration_count());
    for (int t = 0; ok && t < inst.test_count(); ++t)
        ok = sp.restrict_to(m.alloc(t), plan.allocation[t]);
    for (int i = 0; ok && i < m.slots(); ++i)
        for (int u = 0; ok && u < inst.units; ++u) {
            if (m.unit_constraint()[u] < 0)
                continue;
            const bool on = i < plan.configuration_count() &&
                            std::binary_search(plan.activity[i].begin(), plan.activity[i].end(), u);
            ok = sp.assign(m.on(u, i), on ? 1 : 0);
        }
    return ok && sp.propagate();
}

}  // namespace

TEST(Model, Fig1RootNeedsTwoConfigurations)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    EXPECT_GE(m.space().lo(m.configurations()), 2);
}

TEST(Model, BoundedRootIsAtLeastBaseRoot)
{
    const Instance inst = fig1_instance();
    Model a(inst, ModelKind::Full, 8, bounded());
    Model b(inst, ModelKind::Full, 8, base());
    ASSERT_TRUE(a.space().propagate());
    ASSERT_TRUE(b.space().propagate());
    EXPECT_GE(a.space().lo(a.configurations()), b.space().lo(b.configurations()));
    EXPECT_GE(a.space().lo(a.switches()), b.space().lo(b.switches()));
}

TEST(Model, Fig1SingleSlotFailsAtRoot)
{
    const Instance inst = fig1_instance();
    for (const ModelOptions& o : {bounded(), base()}) {
        Model m(inst, ModelKind::Full, 1, o);
        EXPECT_FALSE(m.space().propagate());
    }
}

TEST(Model, OverlappingScopesShareOneSwitch)
{
    const Instance inst = overlapping();
    Model m(inst, ModelKind::Full, 3, bounded());
    EXPECT_FALSE(m.disjoint());
    EXPECT_EQ(m.switch_count(), 1);
    EXPECT_EQ(m.switch_units(0), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(m.switch_var(0), m.switches());
    EXPECT_TRUE(m.constraint_switches().empty());

    Model d(fig1_instance(), ModelKind::Full, 8, bounded());
    EXPECT_TRUE(d.disjoint());
    EXPECT_EQ(d.switch_count(), 2);
}

TEST(Model, GroundTwoConfigurationPlanIsAFixpoint)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    ASSERT_TRUE(ground(m, fig1_plan_two_configs()));
    // Only the lower side of the switch count is filtered.
    EXPECT_EQ(m.space().lo(m.switches()), 0);
    EXPECT_EQ(m.extract_plan(), fig1_plan_two_configs());
}

TEST(Model, GroundThreeConfigurationPlanCountsTwoSwitches)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    ASSERT_TRUE(ground(m, fig1_plan_three_configs()));
    EXPECT_EQ(m.space().lo(m.switches()), 2);
}

TEST(Model, NegativeSwitchCeilingFails)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    const bool ok = m.space().set_hi(m.switches(), -1) && ground(m, fig1_plan_two_configs());
    EXPECT_FALSE(ok);
}

TEST(Model, AllTestsInOneConfigurationFails)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    bool ok = true;
    for (int t = 0; ok && t < inst.test_count(); ++t)
        ok = m.space().restrict_to(m.alloc(t), 0);
    EXPECT_FALSE(ok && m.space().propagate());
}

TEST(Model, ConfigurationCountDominatesLastUsedColumn)
{
    const Instance inst = fig1_instance();
    Model m(inst, ModelKind::Full, 8, bounded());
    ASSERT_TRUE(m.space().propagate());
    ASSERT_TRUE(m.space().restrict_to(m.alloc(0), 4));
    ASSERT_TRUE(m.space().propagate());
    EXPECT_GE(m.space().lo(m.configurations()), 5);
}

TEST(Model, PackingModelHasNoSwitchRelation)
{
    Model m(fig1_instance(), ModelKind::Packing, 8, bounded());
    EXPECT_FALSE(m.has_switch());
    EXPECT_TRUE(m.symmetry_active());
    ASSERT_TRUE(m.space().propagate());
    EXPECT_EQ(m.space().hi(m.switches()), 0);
}

TEST(Model, WeightFollowsUnitsAndTestCount)
{
    Model m(fig1_instance(), ModelKind::Full, 3, bounded());
    EXPECT_EQ(m.weight(), configuration_weight(6, 8));
}
