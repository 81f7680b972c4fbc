#include "thermoplan/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "thermoplan/strategy.hpp"
#include "thermoplan/switch_engine.hpp"

namespace thermoplan {

std::string to_string(Heuristic h)
{
    switch (h) {
    case Heuristic::Impact: return "impact";
    case Heuristic::Wdeg: return "wdeg";
    case Heuristic::Lex: return "lex";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Optimal: return "OPTIMAL";
    case Status::Feasible: return "FEASIBLE";
    case Status::Infeasible: return "INFEASIBLE";
    case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& o)
{
    nodes += o.nodes;
    fails += o.fails;
    propagations += o.propagations;
    solutions += o.solutions;
    seconds += o.seconds;
    return *this;
}

bool improves(const ObjectiveValue& candidate, const ObjectiveValue& incumbent, ObjectiveMode mode,
              ModelKind kind)
{
    if (kind == ModelKind::Packing)
        return candidate.configurations < incumbent.configurations;
    if (mode == ObjectiveMode::Weighted)
        return candidate.weighted < incumbent.weighted;
    if (candidate.configurations != incumbent.configurations)
        return candidate.configurations < incumbent.configurations;
    return candidate.switches < incumbent.switches;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Choice {
    enum Kind { Alloc, Conf, Complete, Activity } kind;
    int var = -1;
    int value = 0;
    bool binary = true;
};

class Search {
public:
    Search(Model& model, const SolveOptions& options)
        : model_(model), sp_(model.space()), opt_(options), brancher_(model, options.heuristic)
    {
        const int n = model.instance().test_count();
        weight_slots_ = model.options().weight_slots < 0 ? n : model.options().weight_slots;
    }

    SolveOutcome run()
    {
        start_ = Clock::now();
        const Instance& inst = model_.instance();
        if (opt_.incumbent && verify(inst, *opt_.incumbent).empty()) {
            best_plan_ = *opt_.incumbent;
            best_ = objective(inst, *opt_.incumbent, weight_slots_);
            tighten_cut();
        }

        bool ok = sp_.set_lo(model_.configurations(), opt_.min_configurations) && sp_.propagate();
        if (ok) {
            root_conf_lo_ = sp_.lo(model_.configurations());
            root_switch_lo_ = sp_.lo(model_.switches());
        }
        bool exhausted = dfs(ok);
        return finish(exhausted, ok);
    }

private:
    bool out_of_budget() const
    {
        const Budget& b = opt_.budget;
        if (b.nodes >= 0 && stats_.nodes >= b.nodes)
            return true;
        if (b.fails >= 0 && stats_.fails >= b.fails)
            return true;
        if (b.solutions >= 0 && stats_.solutions >= b.solutions)
            return true;
        return b.seconds < std::numeric_limits<double>::infinity() && seconds_since(start_) >= b.seconds;
    }

    // Depth-first search with binary branching. Returns true when the tree
    // was fully explored.
    bool dfs(bool descend)
    {
        struct Frame {
            Choice choice;
            bool right_done;
        };
        std::vector<Frame> frames;
        for (;;) {
            if (descend) {
                if (out_of_budget())
                    return false;
                ++stats_.nodes;
                std::optional<Choice> c = next_choice();
                if (!c) {
                    leaf();
                    descend = false;
                    continue;
                }
                frames.push_back({*c, !c->binary});
                sp_.push_level();
                descend = step(*c, true);
                continue;
            }
            while (!frames.empty() && frames.back().right_done) {
                sp_.pop_level();
                frames.pop_back();
            }
            if (frames.empty())
                return true;
            if (out_of_budget())
                return false;
            sp_.pop_level();
            frames.back().right_done = true;
            sp_.push_level();
            descend = step(frames.back().choice, false);
        }
    }

    // Applies a branch and propagates; failures are counted and, when a
    // propagator is to blame, charged to its test or constraint.
    bool step(const Choice& c, bool left)
    {
        if (!apply(c, left)) {
            ++stats_.fails;
            return false;
        }
        sp_.schedule(model_.cut_propagator());
        if (sp_.propagate())
            return true;
        ++stats_.fails;
        const int p = sp_.failed_propagator();
        if (p < 0)
            return false;
        const Propagator& prop = sp_.propagator(p);
        if (prop.group_kind == Propagator::Group::Test)
            ++model_.test_weight[prop.group];
        else if (prop.group_kind == Propagator::Group::Constraint && prop.group >= 0)
            ++model_.constraint_weight[prop.group];
        return false;
    }

    std::optional<Choice> next_choice()
    {
        if (!model_.all_allocated()) {
            const Decision d = brancher_.select();
            return Choice{Choice::Alloc, model_.alloc(d.test), d.configuration, true};
        }
        const int conf = model_.configurations();
        if (!sp_.fixed(conf)) {
            // A plan with more columns than needed compacts to one with
            // C at its lower bound and no more switches.
            return Choice{Choice::Conf, conf, sp_.lo(conf), false};
        }
        if (model_.all_activity_fixed())
            return std::nullopt;
        if (model_.disjoint())
            return Choice{Choice::Complete, -1, 0, false};
        return activity_choice();
    }

    Choice activity_choice() const
    {
        const int s = model_.slots();
        for (int i = 0; i < s; ++i)
            for (int u : model_.scoped_units()) {
                const int v = model_.on(u, i);
                if (sp_.fixed(v))
                    continue;
                return {Choice::Activity, v, preferred_value(u, i), true};
            }
        throw std::logic_error("no open activity variable");
    }

    // Value the greedy support would give, or 1 without a switch relation.
    int preferred_value(int unit, int col) const
    {
        if (!model_.has_switch() || model_.switch_count() == 0)
            return 1;
        const int k = model_.disjoint() ? model_.unit_constraint()[unit] : 0;
        const auto& units = model_.switch_units(k);
        const int x = static_cast<int>(std::find(units.begin(), units.end(), unit) - units.begin());
        const SupportResult r = find_support(model_.switch_bounds(k), model_.switch_card(k));
        if (!r)
            return 1;
        const auto& buf = r.support->sequence[col + 1];
        return std::binary_search(buf.begin(), buf.end(), x) ? 1 : 0;
    }

    bool apply(const Choice& c, bool left)
    {
        switch (c.kind) {
        case Choice::Alloc:
            return left ? sp_.restrict_to(c.var, c.value) : sp_.remove(c.var, c.value);
        case Choice::Conf:
            return sp_.assign(c.var, c.value);
        case Choice::Activity:
            return sp_.assign(c.var, left ? c.value : 1 - c.value);
        case Choice::Complete:
            return model_.has_switch() ? complete() : complete_packing();
        }
        return false;
    }

    // Switch-minimal activity for each constraint; scopes are disjoint, so
    // the per-constraint supports together are optimal for the allocation.
    bool complete()
    {
        for (int k = 0; k < model_.switch_count(); ++k) {
            const SupportResult r = find_support(model_.switch_bounds(k), model_.switch_card(k));
            if (!r)
                return false;
            const auto& units = model_.switch_units(k);
            for (int i = 0; i < model_.slots(); ++i) {
                const auto& buf = r.support->sequence[i + 1];
                std::vector<char> in(units.size(), 0);
                for (int x : buf)
                    in[x] = 1;
                for (std::size_t x = 0; x < units.size(); ++x)
                    if (!sp_.assign(model_.on(units[x], i), in[x]))
                        return false;
            }
        }
        return true;
    }

    // Packing activity, column by column. Under the lex ordering each column
    // takes the lex-largest completion not above its predecessor: a larger
    // column only leaves more room for the next one, so when this fails no
    // ordered completion exists for the current allocation.
    bool complete_packing()
    {
        const Instance& inst = model_.instance();
        const auto& units = model_.scoped_units();
        const int q = static_cast<int>(units.size());
        const int K = inst.constraint_count();
        const bool ordered = model_.symmetry_active();
        std::vector<int> owner(q);
        for (int k = 0; k < q; ++k)
            owner[k] = model_.unit_constraint()[units[k]];

        std::vector<char> prev, cur(q), req(q), pos(q);
        // Per constraint: required and possible units at positions >= k.
        std::vector<std::vector<int>> req_after(q + 1, std::vector<int>(K)),
            pos_after(q + 1, std::vector<int>(K));
        std::vector<int> target(K), ones(K);
        for (int i = 0; i < model_.slots(); ++i) {
            for (int k = 0; k < q; ++k) {
                const int v = model_.on(units[k], i);
                req[k] = sp_.lo(v) == 1;
                pos[k] = sp_.hi(v) == 1;
            }
            for (int k = q - 1; k >= 0; --k) {
                req_after[k] = req_after[k + 1];
                pos_after[k] = pos_after[k + 1];
                req_after[k][owner[k]] += req[k];
                pos_after[k][owner[k]] += pos[k];
            }
            for (int c = 0; c < K; ++c) {
                const bool on = !model_.has_hason() || sp_.lo(model_.hason(c, i)) == 1;
                target[c] = on ? inst.thermal[c].capacity : 0;
            }
            auto fits = [&](int c, int count, int next) {
                return count + req_after[next][c] <= target[c] &&
                       count + pos_after[next][c] >= target[c];
            };
            std::fill(ones.begin(), ones.end(), 0);
            for (int c = 0; c < K; ++c)
                if (!fits(c, 0, 0))
                    return false;

            int start = 0;
            if (ordered && !prev.empty()) {
                // Follow the previous column as long as possible, remembering
                // the last place where dropping below it stays feasible.
                int drop = -1;
                std::vector<int> drop_ones;
                int k = 0;
                for (; k < q; ++k) {
                    const int c = owner[k];
                    if (prev[k] && !req[k] && fits(c, ones[c], k + 1)) {
                        drop = k;
                        drop_ones = ones;
                    }
                    const bool allowed = prev[k] ? pos[k] : !req[k];
                    if (!allowed || !fits(c, ones[c] + prev[k], k + 1))
                        break;
                    ones[c] += prev[k];
                    cur[k] = prev[k];
                }
                if (k == q) {
                    start = q;
                } else {
                    if (drop < 0)
                        return false;
                    ones = drop_ones;
                    cur[drop] = 0;
                    start = drop + 1;
                }
            }
            for (int k = start; k < q; ++k) {
                const int c = owner[k];
                if (pos[k] && fits(c, ones[c] + 1, k + 1)) {
                    cur[k] = 1;
                    ++ones[c];
                } else if (!req[k] && fits(c, ones[c], k + 1)) {
                    cur[k] = 0;
                } else {
                    return false;
                }
            }
            for (int k = 0; k < q; ++k)
                if (!sp_.assign(model_.on(units[k], i), cur[k]))
                    return false;
            prev = cur;
        }
        return true;
    }

    void leaf()
    {
        const Instance& inst = model_.instance();
        Plan plan = model_.extract_plan();
        const auto problems = verify(inst, plan);
        if (!problems.empty())
            throw std::logic_error("search produced an invalid plan: " + problems.front());
        ++stats_.solutions;
        const ObjectiveValue v = objective(inst, plan, weight_slots_);
        if (best_ && !improves(v, *best_, model_.options().mode, model_.kind()))
            return;
        best_ = v;
        best_plan_ = std::move(plan);
        timeline_.push_back({opt_.phase, seconds_since(start_), v.configurations, v.switches, v.weighted});
        tighten_cut();
    }

    void tighten_cut()
    {
        CutState& cut = model_.cut();
        cut.active = true;
        cut.configurations = best_->configurations;
        cut.switches = best_->switches;
        cut.weighted = best_->weighted;
    }

    SolveOutcome finish(bool exhausted, bool root_ok)
    {
        SolveOutcome out;
        stats_.propagations = sp_.propagations();
        stats_.seconds = seconds_since(start_);
        out.stats = stats_;
        out.exhausted = exhausted;
        out.timeline = timeline_;
        out.plan = best_plan_;
        out.value = best_;
        const long long w = model_.weight();
        Bounds& b = out.bounds;
        if (exhausted) {
            out.status = best_ ? Status::Optimal : Status::Infeasible;
        } else {
            out.status = best_ ? Status::Feasible : Status::Unknown;
            if (root_ok) {
                b.configurations_lo = root_conf_lo_;
                b.weighted_lo = w * root_conf_lo_ + root_switch_lo_;
                // Root bounds hold for plans better than the incumbent only.
                if (best_) {
                    b.configurations_lo = std::min(b.configurations_lo, best_->configurations);
                    b.weighted_lo = std::min(b.weighted_lo, best_->weighted);
                }
            }
        }
        if (best_) {
            b.configurations_hi = best_->configurations;
            b.switches_hi = best_->switches;
            b.weighted_hi = best_->weighted;
            if (exhausted) {
                b.configurations_lo = best_->configurations;
                b.weighted_lo = best_->weighted;
                b.switches_lo = best_->switches;
            }
        }
        out.phases.push_back({opt_.phase, out.status, exhausted, stats_});
        return out;
    }

    Model& model_;
    Space& sp_;
    const SolveOptions& opt_;
    Brancher brancher_;
    int weight_slots_ = 0;
    Clock::time_point start_;
    SearchStats stats_;
    std::optional<ObjectiveValue> best_;
    std::optional<Plan> best_plan_;
    std::vector<TimelineEntry> timeline_;
    int root_conf_lo_ = 0;
    long long root_switch_lo_ = 0;
};

SolveOutcome trivial_outcome(const Instance& inst, const SolveOptions& options)
{
    SolveOutcome out;
    out.plan = Plan{};
    out.value = objective(inst, *out.plan, inst.test_count());
    out.status = Status::Optimal;
    out.exhausted = true;
    out.bounds = {0, 0, 0, 0, 0, 0};
    out.phases.push_back({options.phase, Status::Optimal, true, {}});
    return out;
}

}  // namespace

SolveOutcome search(Model& model, const SolveOptions& options)
{
    return Search(model, options).run();
}

SolveOutcome solve(const Instance& inst, const SolveOptions& options)
{
    if (inst.test_count() == 0)
        return trivial_outcome(inst, options);
    const int slots = options.slots < 0 ? inst.test_count() : options.slots;
    Model model(inst, ModelKind::Full, slots, options.model);
    return search(model, options);
}

SolveOutcome solve_packing(const Instance& inst, const SolveOptions& options)
{
    if (inst.test_count() == 0)
        return trivial_outcome(inst, options);
    const int slots = options.slots < 0 ? inst.test_count() : options.slots;
    Model model(inst, ModelKind::Packing, slots, options.model);
    return search(model, options);
}

Instance grouped_instance(const Instance& inst, const Plan& packing)
{
    Instance grouped;
    grouped.name = inst.name + "-grouped";
    grouped.units = inst.units;
    grouped.thermal = inst.thermal;
    grouped.tests.resize(packing.configuration_count());
    for (int t = 0; t < inst.test_count(); ++t) {
        UnitSet& g = grouped.tests[packing.allocation[t]];
        g.insert(g.end(), inst.tests[t].begin(), inst.tests[t].end());
    }
    for (UnitSet& g : grouped.tests) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }
    return grouped;
}

SolveOutcome solve_sequencing(const Instance& inst, const Plan& packing, const SolveOptions& options)
{
    if (inst.test_count() == 0)
        return trivial_outcome(inst, options);
    const Instance grouped = grouped_instance(inst, packing);
    SolveOptions opt = options;
    opt.incumbent.reset();
    opt.min_configurations = 0;
    if (opt.model.weight_slots < 0)
        opt.model.weight_slots = inst.test_count();
    Model model(grouped, ModelKind::Sequencing, grouped.test_count(), opt.model);
    SolveOutcome out = search(model, opt);

    if (out.plan) {
        Plan plan;
        plan.activity = out.plan->activity;
        plan.allocation.resize(inst.test_count());
        for (int t = 0; t < inst.test_count(); ++t)
            plan.allocation[t] = out.plan->allocation[packing.allocation[t]];
        const auto problems = verify(inst, plan);
        if (!problems.empty())
            throw std::logic_error("sequencing produced an invalid plan: " + problems.front());
        out.value = objective(inst, plan, opt.model.weight_slots);
        out.plan = std::move(plan);
    }
    // Only an upper bound for the instance: another packing may do better.
    out.switches_upper_only = true;
    if (out.status == Status::Optimal)
        out.status = Status::Feasible;
    out.phases.back().status = out.status;
    out.bounds.switches_lo = 0;
    out.bounds.weighted_lo = 0;
    out.bounds.configurations_lo = 0;
    return out;
}

}  // namespace thermoplan
