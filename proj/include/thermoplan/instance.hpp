#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thermoplan {

// Sorted list of zero-based equipment unit ids.
using UnitSet = std::vector<int>;

struct ThermalConstraint {
    UnitSet scope;
    int capacity = 0;

    int scope_size() const { return static_cast<int>(scope.size()); }
    bool operator==(const ThermalConstraint&) const = default;
};

/// A test campaign: `units` equipment units, one required-unit set per test,
/// and thermal constraints asking for exactly `capacity` active units of
/// `scope` in every configuration.
///
/// Ids are zero-based in memory. Files and messages are one-based; the
/// conversion lives in the JSON reader/writer only.
struct Instance {
    std::string name;
    int units = 0;
    std::vector<UnitSet> tests;
    std::vector<ThermalConstraint> thermal;

    int test_count() const { return static_cast<int>(tests.size()); }
    int constraint_count() const { return static_cast<int>(thermal.size()); }

    bool operator==(const Instance&) const = default;
};

struct Violation {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string path;  // JSON-style location, e.g. "thermal[0].capacity"
    std::string message;

    bool is_error() const { return severity == Severity::Error; }
};

/// Every well-formedness breach of `inst`. Units used by no test are
/// reported as warnings; everything else is an error.
std::vector<Violation> validate(const Instance& inst);

bool has_errors(const std::vector<Violation>& violations);

class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the JSON instance format. Test ids may be sparse or unordered; they
/// are renumbered densely in ascending id order. Throws InstanceError with a
/// field path on malformed input or validation errors.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

/// Canonical JSON text: fixed key order, sorted arrays, one test per line.
std::string serialize_instance(const Instance& inst);
void write_instance(const Instance& inst, const std::string& path);

struct MergeMap {
    std::vector<int> representative;       // original test -> merged test
    std::vector<std::vector<int>> groups;  // merged test -> original tests

    /// Allocation on the merged instance -> allocation on the original one.
    std::vector<int> expand(const std::vector<int>& merged_allocation) const;
};

/// Collapses tests with identical equipment sets. Merged tests keep the order
/// of their first occurrence.
std::pair<Instance, MergeMap> merge_identical_tests(const Instance& inst);

bool scopes_overlap(const Instance& inst);

// Derived lookups shared by the solver, bounds and baselines.

/// unit -> index of the first constraint whose scope contains it, or -1.
std::vector<int> unit_constraint(const Instance& inst);

/// unit -> true iff some test requires it.
std::vector<bool> tested_units(const Instance& inst);

int tested_unit_count(const Instance& inst);

/// Tests of `inst` restricted to `keep` (zero-based ids, in the given order).
Instance restrict_tests(const Instance& inst, const std::vector<int>& keep);

/// The worked two-constraint example: 6 units, 8 tests, scopes {1,2,3} and
/// {4,5,6} with capacity 2 (one-based).
Instance fig1_instance();

}  // namespace thermoplan
