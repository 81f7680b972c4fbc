#include "thermoplan/plan.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thermoplan {

using nlohmann::json;

namespace {

std::vector<std::vector<char>> membership(const Plan& plan, int units)
{
    std::vector<std::vector<char>> on(plan.activity.size(), std::vector<char>(units, 0));
    for (std::size_t i = 0; i < plan.activity.size(); ++i)
        for (int u : plan.activity[i])
            if (u >= 0 && u < units)
                on[i][u] = 1;
    return on;
}

}  // namespace

std::vector<std::string> verify(const Instance& inst, const Plan& plan)
{
    std::vector<std::string> out;
    const int k = plan.configuration_count();
    if (static_cast<int>(plan.allocation.size()) != inst.test_count()) {
        out.push_back("allocation covers " + std::to_string(plan.allocation.size()) +
                      " tests, instance has " + std::to_string(inst.test_count()));
        return out;
    }
    for (int i = 0; i < k; ++i)
        for (int u : plan.activity[i])
            if (u < 0 || u >= inst.units)
                out.push_back("configuration " + std::to_string(i + 1) + " activates unknown unit " +
                              std::to_string(u + 1));

    const auto on = membership(plan, inst.units);
    std::vector<bool> used(k, false);
    for (int t = 0; t < inst.test_count(); ++t) {
        const int i = plan.allocation[t];
        if (i < 0 || i >= k) {
            out.push_back("test " + std::to_string(t + 1) + " allocated to configuration " +
                          std::to_string(i + 1) + " outside [1, " + std::to_string(k) + "]");
            continue;
        }
        used[i] = true;
        for (int u : inst.tests[t])
            if (!on[i][u])
                out.push_back("test " + std::to_string(t + 1) + " requires unit " +
                              std::to_string(u + 1) + " inactive in configuration " +
                              std::to_string(i + 1));
    }
    for (int i = 0; i < k; ++i) {
        if (!used[i]) {
            out.push_back("configuration " + std::to_string(i + 1) + " has no test");
            continue;
        }
        for (int c = 0; c < inst.constraint_count(); ++c) {
            const auto& tc = inst.thermal[c];
            int active = 0;
            for (int u : tc.scope)
                active += on[i][u];
            if (active != tc.capacity)
                out.push_back("thermal constraint " + std::to_string(c + 1) + " cardinality " +
                              std::to_string(active) + " ≠ " + std::to_string(tc.capacity) +
                              " in configuration " + std::to_string(i + 1));
        }
    }
    return out;
}

long long count_switches(const Instance& inst, const Plan& plan)
{
    const auto on = membership(plan, inst.units);
    long long activations = 0;
    for (std::size_t i = 0; i < on.size(); ++i)
        for (int u = 0; u < inst.units; ++u)
            if (on[i][u] && (i == 0 || !on[i - 1][u]))
                ++activations;
    if (on.empty())
        return 0;
    return activations - tested_unit_count(inst);
}

long long configuration_weight(int units, int slots)
{
    const long long prod = static_cast<long long>(units) * slots;
    return (prod + 1) / 2;
}

ObjectiveValue objective(const Instance& inst, const Plan& plan, int slots)
{
    ObjectiveValue v;
    v.configurations = plan.configuration_count();
    v.switches = count_switches(inst, plan);
    v.slot_bound = slots;
    v.weighted = configuration_weight(inst.units, slots) * v.configurations + v.switches;
    return v;
}

std::string serialize_plan(const Instance& inst, const Plan& plan)
{
    std::ostringstream os;
    os << "{\"allocation\":[";
    for (std::size_t t = 0; t < plan.allocation.size(); ++t)
        os << (t ? "," : "") << plan.allocation[t] + 1;
    os << "],\n \"activity\":[";
    for (std::size_t i = 0; i < plan.activity.size(); ++i) {
        UnitSet a = plan.activity[i];
        std::sort(a.begin(), a.end());
        os << (i ? "," : "") << '[';
        for (std::size_t k = 0; k < a.size(); ++k)
            os << (k ? "," : "") << a[k] + 1;
        os << ']';
    }
    os << "],\n \"objective\":{\"configurations\":" << plan.configuration_count()
       << ",\"switches\":" << count_switches(inst, plan) << "}}\n";
    return os.str();
}

Plan parse_plan(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("malformed plan: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("allocation") || !doc.contains("activity"))
        throw InstanceError("plan: expected fields \"allocation\" and \"activity\"");
    Plan plan;
    try {
        for (int v : doc["allocation"].get<std::vector<int>>())
            plan.allocation.push_back(v - 1);
        for (const auto& row : doc["activity"].get<std::vector<std::vector<int>>>()) {
            UnitSet a;
            for (int u : row)
                a.push_back(u - 1);
            std::sort(a.begin(), a.end());
            plan.activity.push_back(std::move(a));
        }
    } catch (const json::exception& e) {
        throw InstanceError(std::string("plan: ") + e.what());
    }
    return plan;
}

Plan read_plan(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InstanceError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_plan(buf.str());
}

void write_plan(const Instance& inst, const Plan& plan, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InstanceError("cannot write " + path);
    out << serialize_plan(inst, plan);
}

Plan fig1_plan_two_configs()
{
    // tests {2,3,5,7,8} -> 1, {1,4,6} -> 2
    return {{1, 0, 0, 1, 0, 1, 0, 0}, {{1, 2, 4, 5}, {0, 2, 3, 4}}};
}

Plan fig1_plan_three_configs()
{
    // tests {1,2} -> 1, {3,4,5} -> 2, {6,7,8} -> 3
    return {{0, 0, 1, 1, 1, 2, 2, 2}, {{0, 1, 3, 5}, {1, 2, 3, 4}, {0, 2, 4, 5}}};
}

}  // namespace thermoplan
