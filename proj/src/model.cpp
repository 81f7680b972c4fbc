#include "thermoplan/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "thermoplan/packing_bounds.hpp"

namespace thermoplan {

std::string to_string(Variant v)
{
    return v == Variant::Base ? "base" : "bounded";
}

std::string to_string(ObjectiveMode m)
{
    return m == ObjectiveMode::Weighted ? "weighted" : "lex";
}

std::string to_string(ModelKind k)
{
    switch (k) {
    case ModelKind::Full: return "full";
    case ModelKind::Packing: return "packing";
    case ModelKind::Sequencing: return "sequencing";
    }
    return "?";
}

namespace {

// Runs `body` until it stops changing domains. Propagators are not woken by
// their own updates, so each one iterates to its own fixpoint.
template <class F>
bool to_fixpoint(Space& sp, F&& body)
{
    for (;;) {
        const auto before = sp.changes();
        if (!body())
            return false;
        if (sp.changes() == before)
            return true;
    }
}

Propagator& tag(Propagator& p, Propagator::Group kind, int group)
{
    p.group_kind = kind;
    p.group = group;
    return p;
}

/// A test placed in a column switches its units on there. `first` holds the
/// activity variable of each unit in column 0; a unit's columns are consecutive.
class TestPlacement : public Propagator {
public:
    TestPlacement(int alloc, std::vector<int> first) : alloc_(alloc), first_(std::move(first)) {}
    bool propagate(Space& sp) override
    {
        if (!sp.dom_fixed(alloc_))
            return true;
        const int col = sp.min(alloc_);
        for (int v : first_)
            if (!sp.set_lo(v + col, 1))
                return false;
        return true;
    }
    const char* name() const override { return "placement"; }

private:
    int alloc_;
    std::vector<int> first_;
};

/// A unit switched off in a column removes that column from its tests.
class UnitOff : public Propagator {
public:
    UnitOff(int on, int col, std::vector<int> allocs) : on_(on), col_(col), allocs_(std::move(allocs)) {}
    bool propagate(Space& sp) override
    {
        if (sp.hi(on_) != 0)
            return true;
        for (int a : allocs_)
            if (!sp.remove(a, col_))
                return false;
        return true;
    }
    const char* name() const override { return "unit-off"; }

private:
    int on_, col_;
    std::vector<int> allocs_;
};

/// The configuration count covers every used column.
class MaxAlloc : public Propagator {
public:
    MaxAlloc(std::vector<int> allocs, int conf) : allocs_(std::move(allocs)), conf_(conf) {}
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            int need = 0;
            for (int a : allocs_)
                need = std::max(need, sp.min(a) + 1);
            if (!sp.set_lo(conf_, need))
                return false;
            for (int a : allocs_)
                if (!sp.remove_above(a, sp.hi(conf_) - 1))
                    return false;
            return true;
        });
    }
    const char* name() const override { return "max-alloc"; }

private:
    std::vector<int> allocs_;
    int conf_;
};

struct Counts {
    int ones = 0, zeros = 0;
};

Counts count(const Space& sp, const std::vector<int>& vars)
{
    Counts c;
    for (int v : vars) {
        c.ones += sp.lo(v) == 1;
        c.zeros += sp.hi(v) == 0;
    }
    return c;
}

bool fill_unfixed(Space& sp, const std::vector<int>& vars, int value)
{
    for (int v : vars)
        if (!sp.fixed(v) && !sp.assign(v, value))
            return false;
    return true;
}

/// Exactly `cap` of the booleans are 1.
bool exact_count(Space& sp, const std::vector<int>& vars, int cap)
{
    const Counts c = count(sp, vars);
    const int q = static_cast<int>(vars.size());
    if (c.ones > cap || q - c.zeros < cap)
        return false;
    if (c.ones == cap)
        return fill_unfixed(sp, vars, 0);
    if (q - c.zeros == cap)
        return fill_unfixed(sp, vars, 1);
    return true;
}

/// Base cardinality rule: every column activates exactly the capacity.
class Thermal : public Propagator {
public:
    Thermal(std::vector<int> vars, int cap) : vars_(std::move(vars)), cap_(cap) {}
    bool propagate(Space& sp) override { return exact_count(sp, vars_, cap_); }
    const char* name() const override { return "thermal"; }

private:
    std::vector<int> vars_;
    int cap_;
};

/// Exact-or-zero cardinality of one column, driven by its has-on flag.
class HasOn : public Propagator {
public:
    HasOn(std::vector<int> vars, int flag, int cap) : vars_(std::move(vars)), flag_(flag), cap_(cap) {}
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            const Counts c = count(sp, vars_);
            const int q = static_cast<int>(vars_.size());
            if (c.ones > 0 && !sp.set_lo(flag_, 1))
                return false;
            if (sp.lo(flag_) == 0 && q - c.zeros < cap_ && !sp.set_hi(flag_, 0))
                return false;
            if (sp.hi(flag_) == 0)
                return fill_unfixed(sp, vars_, 0);
            if (sp.lo(flag_) == 1)
                return exact_count(sp, vars_, cap_);
            return true;
        });
    }
    const char* name() const override { return "has-on"; }

private:
    std::vector<int> vars_;
    int flag_, cap_;
};

/// Unary encoding of the configuration count: flag i holds iff C > i.
class Order : public Propagator {
public:
    Order(std::vector<int> flags, int conf) : flags_(std::move(flags)), conf_(conf) {}
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            for (int i = 0; i < static_cast<int>(flags_.size()); ++i) {
                const int h = flags_[i];
                if (sp.lo(conf_) >= i + 1 && !sp.set_lo(h, 1))
                    return false;
                if (sp.hi(conf_) <= i && !sp.set_hi(h, 0))
                    return false;
                if (sp.lo(h) == 1 && !sp.set_lo(conf_, i + 1))
                    return false;
                if (sp.hi(h) == 0 && !sp.set_hi(conf_, i))
                    return false;
            }
            return true;
        });
    }
    const char* name() const override { return "order"; }

private:
    std::vector<int> flags_;
    int conf_;
};

/// N = max(floor, number of active columns).
class ActiveCount : public Propagator {
public:
    ActiveCount(std::vector<int> vars, int total, int floor)
        : vars_(std::move(vars)), total_(total), floor_(floor)
    {
    }
    bool propagate(Space& sp) override
    {
        const int s = static_cast<int>(vars_.size());
        return to_fixpoint(sp, [&] {
            const Counts c = count(sp, vars_);
            if (!sp.set_lo(total_, std::max(floor_, c.ones)) ||
                !sp.set_hi(total_, std::max(floor_, s - c.zeros)))
                return false;
            if (c.ones == sp.hi(total_))
                return fill_unfixed(sp, vars_, 0);
            // Above the floor N is the count itself.
            if (sp.lo(total_) > floor_ && s - c.zeros == sp.lo(total_))
                return fill_unfixed(sp, vars_, 1);
            return true;
        });
    }
    const char* name() const override { return "active-count"; }

private:
    std::vector<int> vars_;
    int total_, floor_;
};

/// Sum of the per-unit counts of a scope equals capacity times C.
class Capacity : public Propagator {
public:
    Capacity(std::vector<int> totals, int conf, int cap)
        : totals_(std::move(totals)), conf_(conf), cap_(cap)
    {
    }
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            long long lo = 0, hi = 0;
            for (int v : totals_) {
                lo += sp.lo(v);
                hi += sp.hi(v);
            }
            if (!sp.set_lo(conf_, static_cast<int>(ceil_div(lo, cap_))) ||
                !sp.set_hi(conf_, static_cast<int>(hi / cap_)))
                return false;
            const long long top = static_cast<long long>(cap_) * sp.hi(conf_);
            const long long bottom = static_cast<long long>(cap_) * sp.lo(conf_);
            for (int v : totals_) {
                if (!sp.set_hi(v, static_cast<int>(std::min<long long>(sp.hi(v), top - (lo - sp.lo(v))))) ||
                    !sp.set_lo(v, static_cast<int>(std::max<long long>(sp.lo(v), bottom - (hi - sp.hi(v))))))
                    return false;
            }
            return true;
        });
    }
    const char* name() const override { return "capacity"; }

private:
    std::vector<int> totals_;
    int conf_, cap_;
};

/// Lower bound on a switch variable from the greedy support.
class SwitchBound : public Propagator {
public:
    SwitchBound(const Model& model, int k, bool plus) : model_(model), k_(k), plus_(plus) {}
    bool propagate(Space& sp) override
    {
        static const std::vector<char> none;
        const int z = model_.switch_var(k_);
        const int offset = model_.switch_offset(k_);
        const SwitchFilter f =
            filter_switch(model_.switch_bounds(k_), model_.switch_card(k_), sp.lo(z) + offset,
                          sp.hi(z) + offset, plus_ ? model_.switch_must_visit(k_) : none);
        return !f.fail && sp.set_lo(z, f.z_min - offset);
    }
    const char* name() const override { return "switch"; }

private:
    const Model& model_;
    int k_;
    bool plus_;
};

/// total = sum of parts, bounds in both directions.
class Sum : public Propagator {
public:
    Sum(std::vector<int> parts, int total) : parts_(std::move(parts)), total_(total) {}
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            long long lo = 0, hi = 0;
            for (int v : parts_) {
                lo += sp.lo(v);
                hi += sp.hi(v);
            }
            if (!sp.set_lo(total_, static_cast<int>(std::max<long long>(sp.lo(total_), lo))) ||
                !sp.set_hi(total_, static_cast<int>(std::min<long long>(sp.hi(total_), hi))))
                return false;
            for (int v : parts_) {
                const long long up = sp.hi(total_) - (lo - sp.lo(v));
                const long long down = sp.lo(total_) - (hi - sp.hi(v));
                if (up < sp.hi(v) && !sp.set_hi(v, static_cast<int>(up)))
                    return false;
                if (down > sp.lo(v) && !sp.set_lo(v, static_cast<int>(down)))
                    return false;
            }
            return true;
        });
    }
    const char* name() const override { return "sum"; }

private:
    std::vector<int> parts_;
    int total_;
};

/// Objective cut: only plans strictly better than the incumbent survive.
class Cut : public Propagator {
public:
    Cut(const Model& model) : model_(model) {}
    bool propagate(Space& sp) override
    {
        const CutState& cut = model_.cut();
        if (!cut.active)
            return true;
        const int conf = model_.configurations();
        const int z = model_.switches();
        if (model_.kind() == ModelKind::Packing)
            return sp.set_hi(conf, cut.configurations - 1);
        if (model_.options().mode == ObjectiveMode::Weighted) {
            const long long w = model_.weight();
            return to_fixpoint(sp, [&] {
                const long long room = cut.weighted - 1;
                const long long conf_hi = (room - sp.lo(z)) < 0 ? -1 : (room - sp.lo(z)) / w;
                if (conf_hi < sp.hi(conf) && !sp.set_hi(conf, static_cast<int>(conf_hi)))
                    return false;
                const long long z_hi = room - w * sp.lo(conf);
                return z_hi >= sp.hi(z) || sp.set_hi(z, static_cast<int>(std::max<long long>(z_hi, -1)));
            });
        }
        return to_fixpoint(sp, [&] {
            if (!sp.set_hi(conf, cut.configurations))
                return false;
            if (sp.lo(conf) >= cut.configurations &&
                !sp.set_hi(z, static_cast<int>(cut.switches - 1)))
                return false;
            if (sp.lo(z) >= cut.switches && !sp.set_hi(conf, cut.configurations - 1))
                return false;
            return true;
        });
    }
    const char* name() const override { return "cut"; }

private:
    const Model& model_;
};

/// Column i is lexicographically at least column i+1.
class LexPair : public Propagator {
public:
    LexPair(std::vector<int> left, std::vector<int> right)
        : left_(std::move(left)), right_(std::move(right))
    {
    }
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            for (std::size_t k = 0; k < left_.size(); ++k) {
                const int x = left_[k], y = right_[k];
                if (sp.fixed(x) && sp.fixed(y)) {
                    if (sp.lo(x) == sp.lo(y))
                        continue;
                    return sp.lo(x) > sp.lo(y);
                }
                // First undecided position: the left entry must be at least
                // the right one.
                if (sp.lo(y) == 1 && !sp.set_lo(x, 1))
                    return false;
                if (sp.hi(x) == 0 && !sp.set_hi(y, 0))
                    return false;
                return true;
            }
            return true;
        });
    }
    const char* name() const override { return "lex"; }

private:
    std::vector<int> left_, right_;
};

/// Pairwise distinct allocations; with as many tests as columns every column
/// is used, so a column left in one domain is assigned there.
class AllDifferent : public Propagator {
public:
    AllDifferent(std::vector<int> allocs, int slots, bool cover)
        : allocs_(std::move(allocs)), slots_(slots), cover_(cover)
    {
    }
    bool propagate(Space& sp) override
    {
        return to_fixpoint(sp, [&] {
            for (int a : allocs_) {
                if (!sp.dom_fixed(a))
                    continue;
                const int v = sp.min(a);
                for (int b : allocs_)
                    if (b != a && !sp.remove(b, v))
                        return false;
            }
            if (!cover_)
                return true;
            for (int v = 0; v < slots_; ++v) {
                int holder = -1, seen = 0;
                for (int a : allocs_)
                    if (sp.contains(a, v)) {
                        holder = a;
                        ++seen;
                    }
                if (seen == 0)
                    return false;
                if (seen == 1 && !sp.restrict_to(holder, v))
                    return false;
            }
            return true;
        });
    }
    const char* name() const override { return "alldiff"; }

private:
    std::vector<int> allocs_;
    int slots_;
    bool cover_;
};

}  // namespace

Model::Model(const Instance& inst, ModelKind kind, int slots, const ModelOptions& options)
    : inst_(inst), kind_(kind), opt_(options), slots_(slots)
{
    if (slots < 1)
        throw std::invalid_argument("model needs at least one configuration slot");
    const int n = inst.test_count();
    const int m = inst.units;
    const int K = inst.constraint_count();
    weight_ = configuration_weight(m, opt_.weight_slots < 0 ? n : opt_.weight_slots);
    disjoint_ = !scopes_overlap(inst);
    unit_c_ = thermoplan::unit_constraint(inst);
    min_active_ = NeighborhoodTable(inst).min_active;
    for (int u = 0; u < m; ++u)
        if (unit_c_[u] >= 0)
            scoped_.push_back(u);

    for (int t = 0; t < n; ++t)
        alloc_.push_back(space_.new_set_domain(slots));
    on_.reserve(static_cast<std::size_t>(m) * slots);
    for (int k = 0; k < m * slots; ++k)
        on_.push_back(space_.new_int(0, 1));
    conf_ = kind == ModelKind::Sequencing ? space_.new_int(slots, slots) : space_.new_int(1, slots);

    if (has_switch()) {
        long long total = 0;
        if (disjoint_)
            for (int c = 0; c < K; ++c) {
                const int hi = inst.thermal[c].scope_size() * slots;
                zc_.push_back(space_.new_int(0, hi));
                total += hi;
            }
        else
            total = static_cast<long long>(scoped_.size()) * slots;
        z_ = space_.new_int(0, static_cast<int>(total));
    } else {
        z_ = space_.new_int(0, 0);
    }

    test_weight.assign(n, 0);
    constraint_weight.assign(K, 0);

    build_channel();
    if (opt_.variant == Variant::Base)
        build_thermal();
    else
        build_bounded();
    if (has_switch())
        build_switch();
    if (symmetry_active())
        build_symmetry();
    if (kind_ == ModelKind::Sequencing)
        build_alldiff();
    build_cut();
}

void Model::build_channel()
{
    const int n = inst_.test_count();
    std::vector<std::vector<int>> tests_of(inst_.units);
    for (int t = 0; t < n; ++t) {
        for (int u : inst_.tests[t])
            tests_of[u].push_back(alloc_[t]);
        std::vector<int> first;
        for (int u : inst_.tests[t])
            first.push_back(on(u, 0));
        auto p = std::make_unique<TestPlacement>(alloc_[t], first);
        tag(*p, Propagator::Group::Test, t);
        const int id = space_.post(std::move(p), Space::cheap);
        space_.watch_dom(alloc_[t], id);
    }
    for (int u = 0; u < inst_.units; ++u) {
        if (tests_of[u].empty())
            continue;
        for (int i = 0; i < slots_; ++i) {
            auto p = std::make_unique<UnitOff>(on(u, i), i, tests_of[u]);
            tag(*p, Propagator::Group::Constraint, unit_c_[u]);
            const int id = space_.post(std::move(p), Space::cheap);
            space_.watch_int(on(u, i), id);
        }
    }
    const int id = space_.post(std::make_unique<MaxAlloc>(alloc_, conf_), Space::cheap);
    for (int a : alloc_)
        space_.watch_dom(a, id);
    space_.watch_int(conf_, id);
}

void Model::build_thermal()
{
    for (int c = 0; c < inst_.constraint_count(); ++c) {
        const auto& tc = inst_.thermal[c];
        for (int i = 0; i < slots_; ++i) {
            std::vector<int> vars;
            for (int u : tc.scope)
                vars.push_back(on(u, i));
            auto p = std::make_unique<Thermal>(vars, tc.capacity);
            tag(*p, Propagator::Group::Constraint, c);
            const int id = space_.post(std::move(p), Space::cheap);
            for (int v : vars)
                space_.watch_int(v, id);
        }
    }
}

void Model::build_bounded()
{
    const int K = inst_.constraint_count();
    count_.assign(inst_.units, -1);
    for (int u : scoped_) {
        count_[u] = space_.new_int(min_active_[u], std::max(min_active_[u], slots_));
        std::vector<int> vars;
        for (int i = 0; i < slots_; ++i)
            vars.push_back(on(u, i));
        auto p = std::make_unique<ActiveCount>(vars, count_[u], min_active_[u]);
        tag(*p, Propagator::Group::Constraint, unit_c_[u]);
        const int id = space_.post(std::move(p), Space::cheap);
        for (int v : vars)
            space_.watch_int(v, id);
        space_.watch_int(count_[u], id);
    }
    for (int c = 0; c < K; ++c) {
        const auto& tc = inst_.thermal[c];
        std::vector<int> flags;
        for (int i = 0; i < slots_; ++i) {
            const int h = space_.new_int(0, 1);
            hason_.push_back(h);
            flags.push_back(h);
            std::vector<int> vars;
            for (int u : tc.scope)
                vars.push_back(on(u, i));
            auto p = std::make_unique<HasOn>(vars, h, tc.capacity);
            tag(*p, Propagator::Group::Constraint, c);
            const int id = space_.post(std::move(p), Space::cheap);
            for (int v : vars)
                space_.watch_int(v, id);
            space_.watch_int(h, id);
        }
        auto order = std::make_unique<Order>(flags, conf_);
        tag(*order, Propagator::Group::Constraint, c);
        int id = space_.post(std::move(order), Space::cheap);
        for (int h : flags)
            space_.watch_int(h, id);
        space_.watch_int(conf_, id);

        std::vector<int> totals;
        for (int u : tc.scope)
            totals.push_back(count_[u]);
        auto cap = std::make_unique<Capacity>(totals, conf_, tc.capacity);
        tag(*cap, Propagator::Group::Constraint, c);
        id = space_.post(std::move(cap), Space::cheap);
        for (int v : totals)
            space_.watch_int(v, id);
        space_.watch_int(conf_, id);
    }
}

void Model::build_switch()
{
    const std::vector<bool> tested = tested_units(inst_);
    auto add_switch = [&](std::vector<int> units, int var, int group) {
        std::vector<char> must(units.size(), 0);
        int offset = 0;
        for (std::size_t k = 0; k < units.size(); ++k)
            if (tested[units[k]]) {
                must[k] = 1;
                ++offset;
            }
        const int k = switch_count();
        switch_units_.push_back(std::move(units));
        switch_must_.push_back(std::move(must));
        switch_offset_.push_back(offset);
        switch_var_.push_back(var);
        auto p = std::make_unique<SwitchBound>(*this, k, opt_.switch_plus);
        tag(*p, group >= 0 ? Propagator::Group::Constraint : Propagator::Group::None, group);
        const int id = space_.post(std::move(p), Space::expensive);
        for (int u : switch_units_[k])
            for (int i = 0; i < slots_; ++i)
                space_.watch_int(on(u, i), id);
        for (int h : hason_)
            space_.watch_int(h, id);
        space_.watch_int(var, id);
    };
    if (disjoint_) {
        for (int c = 0; c < inst_.constraint_count(); ++c)
            add_switch(inst_.thermal[c].scope, zc_[c], c);
        const int id = space_.post(std::make_unique<Sum>(zc_, z_), Space::cheap);
        for (int v : zc_)
            space_.watch_int(v, id);
        space_.watch_int(z_, id);
    } else if (!scoped_.empty()) {
        add_switch(scoped_, z_, -1);
    }
}

SetVarBounds Model::switch_bounds(int k) const
{
    const auto& units = switch_units_[k];
    SetVarBounds b(slots_ + 1, static_cast<int>(units.size()));
    for (std::size_t x = 0; x < units.size(); ++x) {
        b.set_possible(0, static_cast<int>(x), false);
        for (int i = 0; i < slots_; ++i) {
            const int v = on(units[x], i);
            b.set_required(i + 1, static_cast<int>(x), space_.lo(v) == 1);
            b.set_possible(i + 1, static_cast<int>(x), space_.hi(v) == 1);
        }
    }
    return b;
}

CardProfile Model::switch_card(int k) const
{
    int lo = 0, hi = 0;
    if (disjoint_) {
        lo = hi = inst_.thermal[k].capacity;
    } else {
        for (const auto& tc : inst_.thermal) {
            lo = std::max(lo, tc.capacity);
            hi += tc.capacity;
        }
        hi = std::min<int>(hi, static_cast<int>(switch_units_[k].size()));
    }
    CardProfile card = CardProfile::constant(slots_ + 1, lo, hi);
    card.min[0] = card.max[0] = 0;
    if (opt_.variant == Variant::Bounded) {
        // Every constraint shares the same has-on pattern; read constraint 0's
        // (or constraint k's when each switch has its own).
        const int c = disjoint_ ? k : 0;
        for (int i = 0; i < slots_; ++i) {
            const int h = hason(c, i);
            if (space_.hi(h) == 0)
                card.min[i + 1] = card.max[i + 1] = 0;
            else if (space_.lo(h) == 0)
                card.min[i + 1] = 0;
        }
    }
    return card;
}

void Model::build_symmetry()
{
    if (scoped_.empty())
        return;
    for (int i = 0; i + 1 < slots_; ++i) {
        std::vector<int> left, right;
        for (int u : scoped_) {
            left.push_back(on(u, i));
            right.push_back(on(u, i + 1));
        }
        const int id = space_.post(std::make_unique<LexPair>(left, right), Space::cheap);
        for (int v : left)
            space_.watch_int(v, id);
        for (int v : right)
            space_.watch_int(v, id);
    }
}

void Model::build_alldiff()
{
    const int id = space_.post(
        std::make_unique<AllDifferent>(alloc_, slots_, inst_.test_count() == slots_), Space::cheap);
    for (int a : alloc_)
        space_.watch_dom(a, id);
}

void Model::build_cut()
{
    cut_prop_ = space_.post(std::make_unique<Cut>(*this), Space::cheap);
    space_.watch_int(conf_, cut_prop_);
    space_.watch_int(z_, cut_prop_);
}

bool Model::all_allocated() const
{
    for (int a : alloc_)
        if (!space_.dom_fixed(a))
            return false;
    return true;
}

bool Model::all_activity_fixed() const
{
    for (int u : scoped_)
        for (int i = 0; i < slots_; ++i)
            if (!space_.fixed(on(u, i)))
                return false;
    return true;
}

Plan Model::extract_plan() const
{
    const int n = inst_.test_count();
    std::vector<int> column_index(slots_, -1);
    for (int t = 0; t < n; ++t)
        column_index[space_.min(alloc_[t])] = 0;
    int used = 0;
    for (int i = 0; i < slots_; ++i)
        if (column_index[i] == 0)
            column_index[i] = used++;

    const std::vector<bool> tested = tested_units(inst_);
    Plan plan;
    plan.allocation.resize(n);
    for (int t = 0; t < n; ++t)
        plan.allocation[t] = column_index[space_.min(alloc_[t])];
    plan.activity.resize(used);
    for (int i = 0; i < slots_; ++i) {
        if (column_index[i] < 0)
            continue;
        UnitSet& active = plan.activity[column_index[i]];
        for (int u = 0; u < inst_.units; ++u) {
            if (unit_c_[u] >= 0 ? space_.lo(on(u, i)) == 1 : static_cast<bool>(tested[u]))
                active.push_back(u);
        }
    }
    return plan;
}

}  // namespace thermoplan
