#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thermoplan/instance.hpp"

namespace thermoplan {

/// A test plan: each test's configuration (zero-based, configurations are
/// visited in index order) and the active unit set of every configuration.
struct Plan {
    std::vector<int> allocation;
    std::vector<UnitSet> activity;

    int configuration_count() const { return static_cast<int>(activity.size()); }
    bool operator==(const Plan&) const = default;
};

struct ObjectiveValue {
    int configurations = 0;
    long long switches = 0;
    long long weighted = 0;
    int slot_bound = 0;

    bool operator==(const ObjectiveValue&) const = default;
};

/// Human-readable breaches; empty iff every test's units are active in its
/// configuration, every non-empty configuration meets every thermal
/// constraint exactly, and configurations are contiguous from 1.
std::vector<std::string> verify(const Instance& inst, const Plan& plan);

/// Activations beyond the first: sum over configurations of |A_i \ A_{i-1}|
/// (A_0 empty) minus the number of units some test requires.
long long count_switches(const Instance& inst, const Plan& plan);

/// Weight on the configuration count in the weighted objective:
/// ceil(units * slots / 2).
long long configuration_weight(int units, int slots);

ObjectiveValue objective(const Instance& inst, const Plan& plan, int slots);

/// `{"allocation":[...], "activity":[[...],...], "objective":{...}}`, one-based.
std::string serialize_plan(const Instance& inst, const Plan& plan);
Plan parse_plan(std::string_view text);
Plan read_plan(const std::string& path);
void write_plan(const Instance& inst, const Plan& plan, const std::string& path);

/// The packing/sequence of the worked example with two configurations and
/// no extra activation.
Plan fig1_plan_two_configs();
/// The three-configuration plan with two extra activations.
Plan fig1_plan_three_configs();

}  // namespace thermoplan
