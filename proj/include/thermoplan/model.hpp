#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thermoplan/instance.hpp"
#include "thermoplan/plan.hpp"
#include "thermoplan/space.hpp"
#include "thermoplan/switch_engine.hpp"

namespace thermoplan {

enum class Variant { Base, Bounded };
enum class ObjectiveMode { Weighted, Lexicographic };
enum class ModelKind { Full, Packing, Sequencing };

std::string to_string(Variant v);
std::string to_string(ObjectiveMode m);
std::string to_string(ModelKind k);

struct ModelOptions {
    Variant variant = Variant::Bounded;
    ObjectiveMode mode = ObjectiveMode::Weighted;
    bool switch_plus = true;
    bool symmetry = true;  // honoured by the packing model only
    int weight_slots = -1;  // slots used for the configuration weight; -1 means n
};

/// Incumbent the objective cut is derived from. Not trailed: it only tightens.
struct CutState {
    bool active = false;
    int configurations = 0;
    long long switches = 0;
    long long weighted = 0;
};

/// Decision variables and propagators for one of the three models over
/// `slots` configuration columns. Columns and tests are zero-based; the
/// configuration count C counts columns, so a_t <= C - 1.
class Model {
public:
    Model(const Instance& inst, ModelKind kind, int slots, const ModelOptions& options);

    const Instance& instance() const { return inst_; }
    ModelKind kind() const { return kind_; }
    const ModelOptions& options() const { return opt_; }
    int slots() const { return slots_; }
    long long weight() const { return weight_; }
    bool disjoint() const { return disjoint_; }
    bool has_switch() const { return kind_ != ModelKind::Packing; }
    bool symmetry_active() const { return kind_ == ModelKind::Packing && opt_.symmetry; }

    Space& space() { return space_; }
    const Space& space() const { return space_; }

    int alloc(int t) const { return alloc_[t]; }
    int on(int u, int i) const { return on_[u * slots_ + i]; }
    int hason(int c, int i) const { return hason_[c * slots_ + i]; }
    int count(int u) const { return count_[u]; }
    int configurations() const { return conf_; }
    int switches() const { return z_; }
    /// Per-constraint switch variables; empty under overlapping scopes.
    const std::vector<int>& constraint_switches() const { return zc_; }
    bool has_hason() const { return !hason_.empty(); }

    /// Units per constraint scope and the constraint owning each unit
    /// (-1 for units in no scope; the first one under overlap).
    const std::vector<int>& unit_constraint() const { return unit_c_; }
    const std::vector<int>& min_active() const { return min_active_; }
    /// Units in at least one scope, ascending.
    const std::vector<int>& scoped_units() const { return scoped_; }

    /// Switch relations: one per constraint when scopes are disjoint, a
    /// single one over every scoped unit otherwise.
    int switch_count() const { return static_cast<int>(switch_units_.size()); }
    /// Units of switch k, in the item order of its buffer view.
    const std::vector<int>& switch_units(int k) const { return switch_units_[k]; }
    /// Buffer view of switch k: a virtual empty column, then the model columns.
    SetVarBounds switch_bounds(int k) const;
    CardProfile switch_card(int k) const;
    const std::vector<char>& switch_must_visit(int k) const { return switch_must_[k]; }
    /// Tested units of switch k: its first activations are not counted.
    int switch_offset(int k) const { return switch_offset_[k]; }
    /// Variable bounded by switch k (z_c, or z under overlap).
    int switch_var(int k) const { return switch_var_[k]; }

    CutState& cut() { return cut_; }
    const CutState& cut() const { return cut_; }
    int cut_propagator() const { return cut_prop_; }

    bool all_allocated() const;
    bool all_activity_fixed() const;
    /// Plan read off a state where allocation and activity are fixed: empty
    /// columns are dropped and units outside every scope that some test
    /// needs are kept on in every configuration.
    Plan extract_plan() const;

    std::vector<int> test_weight;
    std::vector<int> constraint_weight;

private:
    void build_channel();
    void build_thermal();
    void build_bounded();
    void build_switch();
    void build_symmetry();
    void build_alldiff();
    void build_cut();

    const Instance& inst_;
    ModelKind kind_;
    ModelOptions opt_;
    int slots_;
    long long weight_;
    bool disjoint_;
    Space space_;

    std::vector<int> alloc_, on_, hason_, count_, zc_;
    int conf_ = -1, z_ = -1;
    int cut_prop_ = -1;
    CutState cut_;

    std::vector<int> unit_c_;
    std::vector<int> min_active_;
    std::vector<std::vector<int>> switch_units_;
    std::vector<std::vector<char>> switch_must_;
    std::vector<int> switch_offset_, switch_var_;
    std::vector<int> scoped_;
};

}  // namespace thermoplan
