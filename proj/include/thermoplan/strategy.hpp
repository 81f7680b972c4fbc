#pragma once

#include <cstdint>
#include <vector>

#include "thermoplan/model.hpp"
#include "thermoplan/solver.hpp"

namespace thermoplan {

struct Decision {
    int test = -1;
    int configuration = -1;

    bool operator==(const Decision&) const = default;
};

/// Exact fraction, reduced, positive denominator.
struct Ratio {
    long long num = 0;
    long long den = 1;

    bool operator==(const Ratio&) const = default;
};

/// Activity booleans still open for test t's units of scope c in column i.
int delta(const Model& model, int t, int i, int c);

/// How much placing a test tightens a constraint: 1 - q(b - d) / (b(q - d)),
/// saturating at 1 once d reaches the capacity.
Ratio impact_ratio(int scope_size, int capacity, int d);
Ratio impact_conf(const Model& model, int t, int i, int c);

/// Allocation values worth branching on: the used columns plus the first
/// unused one; the whole domain when that leaves nothing.
std::vector<int> restricted_domain(const Model& model, int t);

/// Chooses allocation decisions. Impacts are compared exactly as integers
/// scaled by the lcm of every possible denominator; if that lcm gets too
/// large the scale falls back to a fixed power of two.
class Brancher {
public:
    Brancher(const Model& model, Heuristic heuristic);

    /// Requires an unassigned allocation variable.
    Decision select() const;
    bool exact() const { return exact_; }

    /// Sum over touched constraints of the scaled impact of a_t = i.
    __int128 impact_sum(int t, int i) const;

private:
    Decision select_impact() const;
    Decision select_wdeg() const;
    Decision select_lex() const;
    __int128 scaled(int c, int d) const;

    const Model& model_;
    Heuristic heuristic_;
    bool exact_ = true;
    __int128 scale_ = 1;
    // Per test: touched constraints and the column-0 activity variable of the
    // test's units in each of them.
    std::vector<std::vector<int>> touched_;
    std::vector<std::vector<std::vector<int>>> touched_units_;
};

Decision select_decision(const Model& model, Heuristic heuristic);

/// First solution of the packing model under lexicographic branching.
SolveOutcome greedy_descent(const Instance& inst, const ModelOptions& model = {});

struct MultiStageOptions {
    SolveOptions solve;  // budget is the total over all phases
    // Shares of the total budget; the full phase also gets whatever the
    // earlier phases leave unused. A zero greedy share leaves greedy untimed.
    double greedy_share = 0.0;
    double packing_share = 0.2;
    double sequencing_share = 0.2;
    double full_share = 0.6;
};

/// Greedy packing, exact packing, sequencing of the best packing, then the
/// full model seeded with everything learnt so far.
SolveOutcome multi_stage(const Instance& inst, const MultiStageOptions& options);

}  // namespace thermoplan
