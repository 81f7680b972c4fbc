#include <gtest/gtest.h>

#include <random>

#include "thermoplan/instance.hpp"
#include "thermoplan/plan.hpp"

using namespace thermoplan;

namespace {

std::string fig1_text()
{
    return serialize_instance(fig1_instance());
}

bool mentions(const std::vector<Violation>& vs, const std::string& needle)
{
    for (const auto& v : vs)
        if (v.message.find(needle) != std::string::npos)
            return true;
    return false;
}

Instance random_instance(std::mt19937_64& rng, int n, int m)
{
    Instance inst;
    inst.name = "rand";
    inst.units = m;
    std::uniform_int_distribution<int> unit(0, m - 1);
    for (int t = 0; t < n; ++t) {
        UnitSet e{unit(rng), unit(rng)};
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        inst.tests.push_back(e);
    }
    UnitSet all(m);
    std::iota(all.begin(), all.end(), 0);
    inst.thermal.push_back({all, std::min(m, 2)});
    return inst;
}

}  // namespace

TEST(ParseInstance, ReadsFig1File)
{
    const auto inst = read_instance(std::string(THERMOPLAN_DATA_DIR) + "/fig1.json");
    EXPECT_EQ(inst.units, 6);
    EXPECT_EQ(inst.test_count(), 8);
    EXPECT_EQ(inst.constraint_count(), 2);
    EXPECT_EQ(inst, fig1_instance());
}

TEST(ParseInstance, CapacityAboveScopeIsRejected)
{
    const std::string doc = R"({"name":"x","units":3,"tests":[{"id":1,"equipment":[1]}],
        "thermal":[{"scope":[1,2,3],"capacity":4}]})";
    try {
        parse_instance(doc);
        FAIL() << "expected an error";
    } catch (const InstanceError& e) {
        EXPECT_NE(std::string(e.what()).find("capacity exceeds scope size"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("thermal[0].capacity"), std::string::npos);
    }
}

TEST(ParseInstance, UnschedulableTestIsRejected)
{
    const std::string doc = R"({"units":3,"tests":[{"id":1,"equipment":[1,2,3]}],
        "thermal":[{"scope":[1,2,3],"capacity":2}]})";
    try {
        parse_instance(doc);
        FAIL() << "expected an error";
    } catch (const InstanceError& e) {
        EXPECT_NE(std::string(e.what()).find("test unschedulable under constraint"),
                  std::string::npos);
    }
}

TEST(ParseInstance, MalformedDocumentsReportPaths)
{
    EXPECT_THROW(parse_instance("{"), InstanceError);
    EXPECT_THROW(parse_instance("[]"), InstanceError);
    try {
        parse_instance(R"({"units":2,"tests":[{"id":1}],"thermal":[]})");
        FAIL();
    } catch (const InstanceError& e) {
        EXPECT_NE(std::string(e.what()).find("tests[0]"), std::string::npos);
    }
    EXPECT_THROW(parse_instance(R"({"units":"six","tests":[],"thermal":[]})"), InstanceError);
}

TEST(ParseInstance, SparseIdsAreRenumberedInOrder)
{
    const auto inst = parse_instance(R"({"units":2,"tests":[{"id":9,"equipment":[2]},
        {"id":3,"equipment":[1]}],"thermal":[]})");
    ASSERT_EQ(inst.test_count(), 2);
    EXPECT_EQ(inst.tests[0], (UnitSet{0}));
    EXPECT_EQ(inst.tests[1], (UnitSet{1}));
    EXPECT_THROW(parse_instance(R"({"units":2,"tests":[{"id":1,"equipment":[2]},
        {"id":1,"equipment":[1]}],"thermal":[]})"),
                 InstanceError);
}

TEST(Validate, Fig1IsClean)
{
    EXPECT_TRUE(validate(fig1_instance()).empty());
}

TEST(Validate, EmptyTestIsNamed)
{
    auto inst = fig1_instance();
    inst.tests[2].clear();
    const auto vs = validate(inst);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_TRUE(vs[0].is_error());
    EXPECT_NE(vs[0].message.find("test 3"), std::string::npos);
}

TEST(Validate, UnusedUnitIsWarning)
{
    Instance inst;
    inst.units = 5;
    inst.tests = {{0, 1}, {2, 3}};
    inst.thermal = {{{0, 1, 2, 3, 4}, 2}};
    const auto vs = validate(inst);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_FALSE(vs[0].is_error());
    EXPECT_EQ(vs[0].message, "unused unit 5");
    EXPECT_FALSE(has_errors(vs));
}

TEST(Validate, UnitOutOfRangeAndEmptyScope)
{
    Instance inst;
    inst.units = 2;
    inst.tests = {{0, 5}};
    inst.thermal = {{{}, 1}};
    const auto vs = validate(inst);
    EXPECT_TRUE(has_errors(vs));
    EXPECT_TRUE(mentions(vs, "unit 6"));
    EXPECT_TRUE(mentions(vs, "empty scope"));
}

TEST(Serialize, RoundTripIsByteIdentical)
{
    const std::string text = fig1_text();
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        auto inst = random_instance(rng, 6, 5);
        if (has_errors(validate(inst)))
            continue;
        const auto s = serialize_instance(inst);
        EXPECT_EQ(parse_instance(s), inst);
        EXPECT_EQ(serialize_instance(parse_instance(s)), s);
    }
}

TEST(Merge, Fig1IsIdentity)
{
    const auto [merged, map] = merge_identical_tests(fig1_instance());
    EXPECT_EQ(merged.test_count(), 8);
    EXPECT_EQ(merged.tests, fig1_instance().tests);
}

TEST(Merge, DuplicateOfFirstTestJoinsItsGroup)
{
    auto inst = fig1_instance();
    inst.tests.push_back({0, 3});
    const auto [merged, map] = merge_identical_tests(inst);
    EXPECT_EQ(merged.test_count(), 8);
    EXPECT_EQ(map.groups[0], (std::vector<int>{0, 8}));
    EXPECT_EQ(map.representative[8], 0);
}

TEST(Merge, AllIdenticalCollapseToOne)
{
    Instance inst;
    inst.units = 2;
    inst.tests = {{0, 1}, {0, 1}, {0, 1}};
    inst.thermal = {{{0, 1}, 2}};
    const auto [merged, map] = merge_identical_tests(inst);
    EXPECT_EQ(merged.test_count(), 1);
    EXPECT_EQ(map.expand({0}), (std::vector<int>{0, 0, 0}));
}

TEST(Merge, IdempotentAndExpansionKeepsObjective)
{
    auto inst = fig1_instance();
    inst.tests.push_back({0, 3});
    inst.tests.push_back({4, 5});
    const auto [merged, map] = merge_identical_tests(inst);
    const auto [again, map2] = merge_identical_tests(merged);
    EXPECT_EQ(again, merged);
    EXPECT_EQ(map2.groups.size(), static_cast<std::size_t>(merged.test_count()));

    // FIG1's two-configuration plan on the merged instance, expanded.
    Plan p = fig1_plan_two_configs();
    ASSERT_TRUE(verify(merged, p).empty());
    Plan expanded{map.expand(p.allocation), p.activity};
    EXPECT_TRUE(verify(inst, expanded).empty());
    EXPECT_EQ(count_switches(inst, expanded), count_switches(merged, p));
    EXPECT_EQ(expanded.configuration_count(), p.configuration_count());
}

TEST(Scopes, Overlap)
{
    EXPECT_FALSE(scopes_overlap(fig1_instance()));
    Instance inst;
    inst.units = 3;
    inst.tests = {{0}, {1}, {2}};
    inst.thermal = {{{0, 1}, 1}, {{1, 2}, 1}};
    EXPECT_TRUE(scopes_overlap(inst));
    inst.thermal = {{{0, 1, 2}, 1}};
    EXPECT_FALSE(scopes_overlap(inst));
}

TEST(Lookups, UnitConstraintAndTestedUnits)
{
    const auto inst = fig1_instance();
    EXPECT_EQ(unit_constraint(inst), (std::vector<int>{0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(tested_unit_count(inst), 6);
    const auto sub = restrict_tests(inst, {1, 0});
    EXPECT_EQ(sub.tests, (std::vector<UnitSet>{{1, 5}, {0, 3}}));
}
