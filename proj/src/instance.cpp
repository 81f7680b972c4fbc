#include "thermoplan/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thermoplan {

using nlohmann::json;

namespace {

std::string test_path(int t) { return "tests[" + std::to_string(t) + "]"; }
std::string thermal_path(int c) { return "thermal[" + std::to_string(c) + "]"; }

void push_error(std::vector<Violation>& out, std::string path, std::string msg)
{
    out.push_back({Violation::Severity::Error, std::move(path), std::move(msg)});
}

// Checks a unit list for range and duplicates. Returns false on any error.
bool check_units(const UnitSet& units, int m, const std::string& path,
                 const std::string& owner, std::vector<Violation>& out)
{
    bool ok = true;
    std::set<int> seen;
    for (int u : units) {
        if (u < 0 || u >= m) {
            push_error(out, path, owner + " references unit " + std::to_string(u + 1) +
                                      " outside [1, " + std::to_string(m) + "]");
            ok = false;
        } else if (!seen.insert(u).second) {
            push_error(out, path, owner + " lists unit " + std::to_string(u + 1) + " twice");
            ok = false;
        }
    }
    return ok;
}

int get_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        throw InstanceError(path + ": expected an integer");
    return j.get<int>();
}

UnitSet get_units(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw InstanceError(path + ": expected an array of unit ids");
    UnitSet out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(get_int(j[k], path + "[" + std::to_string(k) + "]") - 1);
    return out;
}

const json& member(const json& obj, const char* key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw InstanceError(path + ": missing field \"" + key + "\"");
    return *it;
}

void write_units(std::ostringstream& os, const UnitSet& units)
{
    os << '[';
    for (std::size_t k = 0; k < units.size(); ++k)
        os << (k ? "," : "") << units[k] + 1;
    os << ']';
}

}  // namespace

std::vector<Violation> validate(const Instance& inst)
{
    std::vector<Violation> out;
    const int m = inst.units;
    if (m < 0)
        push_error(out, "units", "unit count is negative");
    if (m == 0 && !inst.tests.empty())
        push_error(out, "units", "tests present but unit count is 0");

    std::vector<bool> test_ok(inst.tests.size(), true);
    for (int t = 0; t < inst.test_count(); ++t) {
        const auto& e = inst.tests[t];
        const std::string owner = "test " + std::to_string(t + 1);
        if (e.empty()) {
            push_error(out, test_path(t), owner + " requires no equipment");
            test_ok[t] = false;
        }
        test_ok[t] = check_units(e, m, test_path(t) + ".equipment", owner, out) && test_ok[t];
    }

    std::vector<bool> constraint_ok(inst.thermal.size(), true);
    for (int c = 0; c < inst.constraint_count(); ++c) {
        const auto& tc = inst.thermal[c];
        const std::string owner = "thermal constraint " + std::to_string(c + 1);
        bool ok = check_units(tc.scope, m, thermal_path(c) + ".scope", owner, out);
        if (tc.scope.empty()) {
            push_error(out, thermal_path(c) + ".scope", owner + " has an empty scope");
            ok = false;
        }
        if (tc.capacity < 1) {
            push_error(out, thermal_path(c) + ".capacity", owner + " capacity must be at least 1");
            ok = false;
        } else if (tc.capacity > tc.scope_size()) {
            push_error(out, thermal_path(c) + ".capacity", "capacity exceeds scope size");
            ok = false;
        }
        constraint_ok[c] = ok;
    }

    for (int t = 0; t < inst.test_count(); ++t) {
        if (!test_ok[t])
            continue;
        for (int c = 0; c < inst.constraint_count(); ++c) {
            if (!constraint_ok[c])
                continue;
            const auto& tc = inst.thermal[c];
            int inside = 0;
            for (int u : inst.tests[t])
                inside += std::binary_search(tc.scope.begin(), tc.scope.end(), u) ? 1 : 0;
            if (inside > tc.capacity)
                push_error(out, test_path(t),
                           "test unschedulable under constraint: test " + std::to_string(t + 1) +
                               " needs " + std::to_string(inside) + " units of thermal constraint " +
                               std::to_string(c + 1) + " (capacity " +
                               std::to_string(tc.capacity) + ")");
        }
    }

    if (m > 0) {
        std::vector<bool> used(m, false);
        for (const auto& e : inst.tests)
            for (int u : e)
                if (u >= 0 && u < m)
                    used[u] = true;
        for (int u = 0; u < m; ++u)
            if (!used[u])
                out.push_back({Violation::Severity::Warning, "units",
                               "unused unit " + std::to_string(u + 1)});
    }
    return out;
}

bool has_errors(const std::vector<Violation>& violations)
{
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.is_error(); });
}

Instance parse_instance(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object())
        throw InstanceError("$: expected a JSON object");

    Instance inst;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            throw InstanceError("name: expected a string");
        inst.name = it->get<std::string>();
    }
    inst.units = get_int(member(doc, "units", "$"), "units");

    const json& tests = member(doc, "tests", "$");
    if (!tests.is_array())
        throw InstanceError("tests: expected an array");
    std::map<int, UnitSet> by_id;
    for (std::size_t k = 0; k < tests.size(); ++k) {
        const std::string path = "tests[" + std::to_string(k) + "]";
        const json& jt = tests[k];
        if (!jt.is_object())
            throw InstanceError(path + ": expected an object");
        int id = static_cast<int>(k) + 1;
        if (auto it = jt.find("id"); it != jt.end())
            id = get_int(*it, path + ".id");
        UnitSet e = get_units(member(jt, "equipment", path), path + ".equipment");
        std::sort(e.begin(), e.end());
        if (!by_id.emplace(id, std::move(e)).second)
            throw InstanceError(path + ".id: duplicate test id " + std::to_string(id));
    }
    for (auto& [id, e] : by_id)
        inst.tests.push_back(std::move(e));

    const json& thermal = member(doc, "thermal", "$");
    if (!thermal.is_array())
        throw InstanceError("thermal: expected an array");
    for (std::size_t k = 0; k < thermal.size(); ++k) {
        const std::string path = "thermal[" + std::to_string(k) + "]";
        const json& jc = thermal[k];
        if (!jc.is_object())
            throw InstanceError(path + ": expected an object");
        ThermalConstraint tc;
        tc.scope = get_units(member(jc, "scope", path), path + ".scope");
        std::sort(tc.scope.begin(), tc.scope.end());
        tc.capacity = get_int(member(jc, "capacity", path), path + ".capacity");
        inst.thermal.push_back(std::move(tc));
    }

    for (const auto& v : validate(inst))
        if (v.is_error())
            throw InstanceError(v.path + ": " + v.message);
    return inst;
}

Instance read_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InstanceError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst)
{
    std::ostringstream os;
    os << "{\n  \"name\": " << json(inst.name).dump() << ",\n";
    os << "  \"units\": " << inst.units << ",\n";
    os << "  \"tests\": [";
    for (int t = 0; t < inst.test_count(); ++t) {
        UnitSet e = inst.tests[t];
        std::sort(e.begin(), e.end());
        os << (t ? ",\n    " : "\n    ") << "{\"id\":" << t + 1 << ",\"equipment\":";
        write_units(os, e);
        os << '}';
    }
    os << (inst.tests.empty() ? "],\n" : "\n  ],\n");
    os << "  \"thermal\": [";
    for (int c = 0; c < inst.constraint_count(); ++c) {
        UnitSet q = inst.thermal[c].scope;
        std::sort(q.begin(), q.end());
        os << (c ? ",\n    " : "\n    ") << "{\"scope\":";
        write_units(os, q);
        os << ",\"capacity\":" << inst.thermal[c].capacity << '}';
    }
    os << (inst.thermal.empty() ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

void write_instance(const Instance& inst, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InstanceError("cannot write " + path);
    out << serialize_instance(inst);
}

std::vector<int> MergeMap::expand(const std::vector<int>& merged_allocation) const
{
    std::vector<int> out(representative.size());
    for (std::size_t t = 0; t < representative.size(); ++t)
        out[t] = merged_allocation.at(representative[t]);
    return out;
}

std::pair<Instance, MergeMap> merge_identical_tests(const Instance& inst)
{
    Instance merged;
    merged.name = inst.name;
    merged.units = inst.units;
    merged.thermal = inst.thermal;

    MergeMap map;
    map.representative.resize(inst.tests.size());
    std::map<UnitSet, int> index;
    for (int t = 0; t < inst.test_count(); ++t) {
        UnitSet e = inst.tests[t];
        std::sort(e.begin(), e.end());
        auto [it, fresh] = index.emplace(e, merged.test_count());
        if (fresh) {
            merged.tests.push_back(e);
            map.groups.emplace_back();
        }
        map.representative[t] = it->second;
        map.groups[it->second].push_back(t);
    }
    return {std::move(merged), std::move(map)};
}

bool scopes_overlap(const Instance& inst)
{
    std::vector<int> owner(std::max(inst.units, 0), -1);
    for (int c = 0; c < inst.constraint_count(); ++c)
        for (int u : inst.thermal[c].scope) {
            if (owner[u] >= 0 && owner[u] != c)
                return true;
            owner[u] = c;
        }
    return false;
}

std::vector<int> unit_constraint(const Instance& inst)
{
    std::vector<int> owner(inst.units, -1);
    for (int c = 0; c < inst.constraint_count(); ++c)
        for (int u : inst.thermal[c].scope)
            if (owner[u] < 0)
                owner[u] = c;
    return owner;
}

std::vector<bool> tested_units(const Instance& inst)
{
    std::vector<bool> used(inst.units, false);
    for (const auto& e : inst.tests)
        for (int u : e)
            used[u] = true;
    return used;
}

int tested_unit_count(const Instance& inst)
{
    auto used = tested_units(inst);
    return static_cast<int>(std::count(used.begin(), used.end(), true));
}

Instance restrict_tests(const Instance& inst, const std::vector<int>& keep)
{
    Instance out;
    out.name = inst.name;
    out.units = inst.units;
    out.thermal = inst.thermal;
    for (int t : keep)
        out.tests.push_back(inst.tests.at(t));
    return out;
}

Instance fig1_instance()
{
    Instance inst;
    inst.name = "fig1";
    inst.units = 6;
    // one-based: {1,4} {2,6} {2,3} {4,5} {2,5} {1,5} {3,6} {5,6}
    inst.tests = {{0, 3}, {1, 5}, {1, 2}, {3, 4}, {1, 4}, {0, 4}, {2, 5}, {4, 5}};
    inst.thermal = {{{0, 1, 2}, 2}, {{3, 4, 5}, 2}};
    return inst;
}

}  // namespace thermoplan
