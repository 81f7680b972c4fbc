#include "thermoplan/strategy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "thermoplan/packing_bounds.hpp"

namespace thermoplan {

int delta(const Model& model, int t, int i, int c)
{
    const Space& sp = model.space();
    const auto& scope = model.instance().thermal[c].scope;
    int d = 0;
    for (int u : model.instance().tests[t])
        if (std::binary_search(scope.begin(), scope.end(), u))
            d += sp.hi(model.on(u, i)) - sp.lo(model.on(u, i));
    return d;
}

Ratio impact_ratio(int scope_size, int capacity, int d)
{
    // Saturated, or the degenerate q = d that valid instances never reach
    // below capacity.
    if (d >= capacity || scope_size <= d)
        return {1, 1};
    long long num = static_cast<long long>(d) * (scope_size - capacity);
    long long den = static_cast<long long>(capacity) * (scope_size - d);
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Ratio impact_conf(const Model& model, int t, int i, int c)
{
    const auto& tc = model.instance().thermal[c];
    return impact_ratio(tc.scope_size(), tc.capacity, delta(model, t, i, c));
}

std::vector<int> restricted_domain(const Model& model, int t)
{
    const Space& sp = model.space();
    int used = -1;
    for (int s = 0; s < model.instance().test_count(); ++s)
        if (sp.dom_fixed(model.alloc(s)))
            used = std::max(used, sp.min(model.alloc(s)));
    std::vector<int> all = sp.values(model.alloc(t));
    std::vector<int> kept;
    for (int v : all)
        if (v <= used + 1)
            kept.push_back(v);
    return kept.empty() ? all : kept;
}

namespace {

constexpr int fallback_shift = 50;
const __int128 scale_cap = static_cast<__int128>(1) << 90;

__int128 gcd128(__int128 a, __int128 b)
{
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

Brancher::Brancher(const Model& model, Heuristic heuristic) : model_(model), heuristic_(heuristic)
{
    const Instance& inst = model.instance();
    touched_.resize(inst.test_count());
    touched_units_.resize(inst.test_count());
    for (int t = 0; t < inst.test_count(); ++t)
        for (int c = 0; c < inst.constraint_count(); ++c) {
            const auto& scope = inst.thermal[c].scope;
            std::vector<int> first;
            for (int u : inst.tests[t])
                if (std::binary_search(scope.begin(), scope.end(), u))
                    first.push_back(model.on(u, 0));
            if (first.empty())
                continue;
            touched_[t].push_back(c);
            touched_units_[t].push_back(std::move(first));
        }

    __int128 l = 1;
    for (const auto& tc : inst.thermal)
        for (int d = 0; d < tc.capacity && exact_; ++d) {
            const __int128 den = static_cast<__int128>(tc.capacity) * (tc.scope_size() - d);
            if (den <= 0)
                continue;
            l = l / gcd128(l, den) * den;
            if (l > scale_cap)
                exact_ = false;
        }
    scale_ = exact_ ? l : static_cast<__int128>(1) << fallback_shift;
}

__int128 Brancher::scaled(int c, int d) const
{
    const auto& tc = model_.instance().thermal[c];
    const Ratio r = impact_ratio(tc.scope_size(), tc.capacity, d);
    return scale_ * r.num / r.den;
}

__int128 Brancher::impact_sum(int t, int i) const
{
    const Space& sp = model_.space();
    __int128 sum = 0;
    for (std::size_t k = 0; k < touched_[t].size(); ++k) {
        int d = 0;
        for (int v : touched_units_[t][k])
            d += sp.hi(v + i) - sp.lo(v + i);
        sum += scaled(touched_[t][k], d);
    }
    return sum;
}

Decision Brancher::select() const
{
    switch (heuristic_) {
    case Heuristic::Impact: return select_impact();
    case Heuristic::Wdeg: return select_wdeg();
    case Heuristic::Lex: return select_lex();
    }
    return {};
}

Decision Brancher::select_impact() const
{
    const Space& sp = model_.space();
    const int n = model_.instance().test_count();
    int used = -1;
    for (int t = 0; t < n; ++t)
        if (sp.dom_fixed(model_.alloc(t)))
            used = std::max(used, sp.min(model_.alloc(t)));

    Decision best;
    __int128 best_num = 0, best_sum = 0;
    std::vector<int> values;
    for (int t = 0; t < n; ++t) {
        const int a = model_.alloc(t);
        if (sp.dom_fixed(a))
            continue;
        values = sp.values(a);
        auto cut = std::upper_bound(values.begin(), values.end(), used + 1);
        if (cut != values.begin())
            values.erase(cut, values.end());

        __int128 sum = 0, least = 0;
        int value = -1;
        for (int i : values) {
            const __int128 imp = impact_sum(t, i);
            sum += imp;
            if (value < 0 || imp < least) {
                value = i;
                least = imp;
            }
        }
        // Score |D'| / mean impact summed over D'; the mean divides by the
        // number of touched constraints, which moves into the numerator.
        const __int128 num = static_cast<__int128>(values.size()) * touched_[t].size();
        bool better;
        if (best.test < 0)
            better = true;
        else if (sum == 0)
            better = false;
        else if (best_sum == 0)
            better = true;
        else
            better = num * best_sum < best_num * sum;
        if (better) {
            best = {t, value};
            best_num = num;
            best_sum = sum;
        }
    }
    if (best.test < 0)
        throw std::logic_error("no unassigned allocation variable");
    return best;
}

Decision Brancher::select_wdeg() const
{
    const Space& sp = model_.space();
    Decision best;
    long long best_size = 0, best_weight = 1;
    for (int t = 0; t < model_.instance().test_count(); ++t) {
        const int a = model_.alloc(t);
        if (sp.dom_fixed(a))
            continue;
        long long weight = 1 + model_.test_weight[t];
        for (int c : touched_[t])
            weight += model_.constraint_weight[c];
        const long long size = sp.size(a);
        if (best.test < 0 || size * best_weight < best_size * weight) {
            best = {t, sp.min(a)};
            best_size = size;
            best_weight = weight;
        }
    }
    if (best.test < 0)
        throw std::logic_error("no unassigned allocation variable");
    return best;
}

Decision Brancher::select_lex() const
{
    const Space& sp = model_.space();
    for (int t = 0; t < model_.instance().test_count(); ++t)
        if (!sp.dom_fixed(model_.alloc(t)))
            return {t, sp.min(model_.alloc(t))};
    throw std::logic_error("no unassigned allocation variable");
}

Decision select_decision(const Model& model, Heuristic heuristic)
{
    return Brancher(model, heuristic).select();
}

SolveOutcome greedy_descent(const Instance& inst, const ModelOptions& model)
{
    SolveOptions o;
    o.model = model;
    // First fit should not backtrack; the column ordering would make it.
    o.model.symmetry = false;
    o.heuristic = Heuristic::Lex;
    o.budget.solutions = 1;
    o.phase = "greedy";
    return solve_packing(inst, o);
}

namespace {

using Clock = std::chrono::steady_clock;

class Stages {
public:
    Stages(const Instance& inst, const MultiStageOptions& options)
        : inst_(inst), opt_(options), start_(Clock::now()),
          weight_(configuration_weight(inst.units, inst.test_count()))
    {
    }

    SolveOutcome run();

private:
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    Budget share(double fraction, bool rest) const
    {
        const Budget& total = opt_.solve.budget;
        Budget b;
        if (total.seconds < std::numeric_limits<double>::infinity())
            b.seconds = rest ? std::max(0.0, total.seconds - elapsed()) : fraction * total.seconds;
        auto part = [&](long long all, long long used) -> long long {
            if (all < 0)
                return -1;
            return rest ? std::max(0LL, all - used) : static_cast<long long>(fraction * all);
        };
        b.nodes = part(total.nodes, out_.stats.nodes);
        b.fails = part(total.fails, out_.stats.fails);
        return b;
    }

    SolveOptions phase_options(const std::string& name) const
    {
        SolveOptions o = opt_.solve;
        o.phase = name;
        o.model.weight_slots = inst_.test_count();
        o.incumbent.reset();
        o.min_configurations = 0;
        o.slots = -1;
        return o;
    }

    void absorb(SolveOutcome& r, double offset)
    {
        out_.stats += r.stats;
        for (auto& p : r.phases)
            out_.phases.push_back(p);
        // Only entries that improve the overall incumbent are kept.
        std::optional<ObjectiveValue> running = best_;
        for (auto e : r.timeline) {
            e.seconds += offset;
            const ObjectiveValue v{e.configurations, e.switches, e.weighted, inst_.test_count()};
            if (!running || improves(v, *running, opt_.solve.model.mode)) {
                out_.timeline.push_back(e);
                running = v;
            }
        }
        if (r.plan && r.value && (!best_ || improves(*r.value, *best_, opt_.solve.model.mode))) {
            best_ = r.value;
            out_.plan = r.plan;
        }
    }

    bool at_lower_bound() const
    {
        if (!best_)
            return false;
        if (opt_.solve.model.mode == ObjectiveMode::Weighted)
            return best_->weighted == weight_ * conf_lb_;
        return best_->configurations == conf_lb_ && best_->switches == 0;
    }

    const Instance& inst_;
    const MultiStageOptions& opt_;
    Clock::time_point start_;
    long long weight_;
    SolveOutcome out_;
    std::optional<ObjectiveValue> best_;
    int conf_lb_ = 0;
};

SolveOutcome Stages::run()
{
    const ObjectiveMode mode = opt_.solve.model.mode;
    conf_lb_ = lb_configs(inst_);

    SolveOptions greedy = phase_options("greedy");
    greedy.heuristic = Heuristic::Lex;
    greedy.model.symmetry = false;
    greedy.budget = {};
    greedy.budget.solutions = 1;
    if (opt_.greedy_share > 0)
        greedy.budget.seconds = share(opt_.greedy_share, false).seconds;
    SolveOutcome r1 = solve_packing(inst_, greedy);
    absorb(r1, 0);
    if (!r1.plan) {
        out_.status = r1.exhausted ? Status::Infeasible : Status::Unknown;
        out_.exhausted = r1.exhausted;
        return out_;
    }
    Plan packing = *r1.plan;

    if (opt_.packing_share > 0) {
        SolveOptions p = phase_options("packing");
        p.slots = packing.configuration_count();
        p.incumbent = packing;
        p.budget = share(opt_.packing_share, false);
        const double offset = elapsed();
        SolveOutcome r2 = solve_packing(inst_, p);
        if (r2.exhausted)
            conf_lb_ = std::max(conf_lb_, r2.value ? r2.value->configurations : 0);
        else
            conf_lb_ = std::max(conf_lb_, r2.bounds.configurations_lo);
        if (r2.plan)
            packing = *r2.plan;
        absorb(r2, offset);
    }

    if (opt_.sequencing_share > 0) {
        SolveOptions s = phase_options("sequencing");
        s.budget = share(opt_.sequencing_share, false);
        const double offset = elapsed();
        SolveOutcome r3 = solve_sequencing(inst_, packing, s);
        absorb(r3, offset);
    }

    bool optimal = at_lower_bound();
    if (!optimal && opt_.full_share > 0) {
        int slots;
        if (mode == ObjectiveMode::Weighted)
            slots = static_cast<int>(std::min<long long>(inst_.test_count(), (best_->weighted - 1) / weight_));
        else
            slots = best_->configurations;
        if (slots < std::max(conf_lb_, 1)) {
            // No plan under the cut fits the proven configuration bound.
            optimal = true;
        } else {
            SolveOptions f = phase_options("full");
            f.model.symmetry = false;
            f.slots = slots;
            f.min_configurations = conf_lb_;
            f.incumbent = out_.plan;
            f.budget = share(opt_.full_share, true);
            const double offset = elapsed();
            SolveOutcome r4 = solve(inst_, f);
            optimal = r4.exhausted;
            if (!r4.exhausted) {
                conf_lb_ = std::max(conf_lb_, std::min(r4.bounds.configurations_lo, best_->configurations));
            }
            absorb(r4, offset);
            optimal = optimal || at_lower_bound();
        }
    }

    if (out_.plan) {
        const auto problems = verify(inst_, *out_.plan);
        if (!problems.empty())
            throw std::logic_error("multi-stage produced an invalid plan: " + problems.front());
    }
    out_.value = best_;
    out_.status = optimal ? Status::Optimal : Status::Feasible;
    out_.exhausted = optimal;
    Bounds& b = out_.bounds;
    b.configurations_hi = best_->configurations;
    b.switches_hi = best_->switches;
    b.weighted_hi = best_->weighted;
    if (optimal) {
        b.configurations_lo = mode == ObjectiveMode::Lexicographic ? best_->configurations : conf_lb_;
        b.switches_lo = mode == ObjectiveMode::Lexicographic ? best_->switches : 0;
        b.weighted_lo = best_->weighted;
    } else {
        b.configurations_lo = conf_lb_;
        b.switches_lo = 0;
        b.weighted_lo = weight_ * conf_lb_;
    }
    out_.stats.seconds = elapsed();
    return out_;
}

}  // namespace

SolveOutcome multi_stage(const Instance& inst, const MultiStageOptions& options)
{
    if (inst.test_count() == 0)
        return solve(inst, options.solve);
    return Stages(inst, options).run();
}

}  // namespace thermoplan
