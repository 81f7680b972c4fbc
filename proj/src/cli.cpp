#include "thermoplan/cli.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thermoplan/baselines.hpp"
#include "thermoplan/oracles.hpp"
#include "thermoplan/packing_bounds.hpp"

namespace thermoplan {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

ObjectiveMode parse_mode(const std::string& s)
{
    if (s == "weighted")
        return ObjectiveMode::Weighted;
    if (s == "lex")
        return ObjectiveMode::Lexicographic;
    throw std::invalid_argument("mode must be weighted or lex, got '" + s + "'");
}

Variant parse_variant(const std::string& s)
{
    if (s == "base")
        return Variant::Base;
    if (s == "bounded")
        return Variant::Bounded;
    throw std::invalid_argument("variant must be base or bounded, got '" + s + "'");
}

Heuristic parse_heuristic(const std::string& s)
{
    if (s == "impact")
        return Heuristic::Impact;
    if (s == "wdeg")
        return Heuristic::Wdeg;
    if (s == "lex")
        return Heuristic::Lex;
    throw std::invalid_argument("strategy must be impact, wdeg or lex, got '" + s + "'");
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// "g,p,s,f" shares; normalized so they sum to one.
void parse_phases(const std::string& text, MultiStageOptions& ms)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw std::invalid_argument("--phases needs four comma-separated shares g,p,s,f");
    double v[4];
    double sum = 0;
    for (int k = 0; k < 4; ++k) {
        std::size_t used = 0;
        v[k] = std::stod(parts[k], &used);
        if (used != parts[k].size() || v[k] < 0)
            throw std::invalid_argument("bad phase share '" + parts[k] + "'");
        sum += v[k];
    }
    if (sum <= 0)
        throw std::invalid_argument("--phases shares sum to zero");
    ms.greedy_share = v[0] / sum;
    ms.packing_share = v[1] / sum;
    ms.sequencing_share = v[2] / sum;
    ms.full_share = v[3] / sum;
}

json stats_json(const SearchStats& s)
{
    return {{"nodes", s.nodes},
            {"fails", s.fails},
            {"propagations", s.propagations},
            {"solutions", s.solutions},
            {"seconds", s.seconds}};
}

json outcome_json(const SolveOutcome& r)
{
    json j;
    j["status"] = to_string(r.status);
    j["exhausted"] = r.exhausted;
    j["switches_upper_only"] = r.switches_upper_only;
    const Bounds& b = r.bounds;
    j["bounds"] = {{"configurations", {b.configurations_lo, b.configurations_hi}},
                   {"switches", {b.switches_lo, b.switches_hi}},
                   {"weighted", {b.weighted_lo, b.weighted_hi}}};
    if (r.value)
        j["objective"] = {{"configurations", r.value->configurations},
                          {"switches", r.value->switches},
                          {"weighted", r.value->weighted}};
    j["stats"] = stats_json(r.stats);
    j["phases"] = json::array();
    for (const PhaseReport& p : r.phases)
        j["phases"].push_back({{"name", p.name},
                               {"status", to_string(p.status)},
                               {"exhausted", p.exhausted},
                               {"stats", stats_json(p.stats)}});
    j["timeline"] = json::array();
    for (const TimelineEntry& e : r.timeline)
        j["timeline"].push_back({{"phase", e.phase},
                                 {"seconds", e.seconds},
                                 {"configurations", e.configurations},
                                 {"switches", e.switches},
                                 {"weighted", e.weighted}});
    return j;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw InstanceError("cannot write " + path);
    f << text;
    if (!f)
        throw InstanceError("write failed: " + path);
}

// Writes the plan and reads it back; a plan that does not survive the round
// trip is an internal fault.
void write_checked_plan(const Instance& inst, const Plan& plan, const std::string& path)
{
    write_plan(inst, plan, path);
    const Plan back = read_plan(path);
    if (back != plan || !verify(inst, back).empty())
        throw std::logic_error("plan written to " + path + " does not re-verify");
}

void print_summary(std::ostream& out, const Instance& inst, const SolveOutcome& r)
{
    out << "instance " << (inst.name.empty() ? "-" : inst.name) << ": " << inst.test_count()
        << " tests, " << inst.units << " units, " << inst.constraint_count() << " constraints\n";
    out << "status " << to_string(r.status);
    if (r.value)
        out << "  configurations " << r.value->configurations << "  switches " << r.value->switches
            << "  weighted " << r.value->weighted;
    out << "\n";
    const Bounds& b = r.bounds;
    out << "bounds configurations [" << b.configurations_lo << ", " << b.configurations_hi
        << "]  switches [" << b.switches_lo << ", " << b.switches_hi << "]"
        << (r.switches_upper_only ? " (upper only)" : "") << "\n";
    out << "nodes " << r.stats.nodes << "  fails " << r.stats.fails << "  time "
        << std::fixed << std::setprecision(3) << r.stats.seconds << "s\n";
    out.unsetf(std::ios::floatfield);
}

struct SolveFlags {
    std::string instance;
    std::string mode = "weighted";
    std::string variant = "bounded";
    std::string strategy = "impact";
    double budget = 60;
    long long nodes = -1;
    std::string phases;
    bool single_stage = false;
    bool no_switch_plus = false;
    bool no_symmetry = false;
    std::string out;
    std::string stats;
    std::string packing;

    SolveOptions options() const
    {
        SolveOptions o;
        o.model.mode = parse_mode(mode);
        o.model.variant = parse_variant(variant);
        o.model.switch_plus = !no_switch_plus;
        o.model.symmetry = !no_symmetry;
        o.heuristic = parse_heuristic(strategy);
        if (budget > 0)
            o.budget.seconds = budget;
        o.budget.nodes = nodes;
        return o;
    }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool full)
{
    cmd->add_option("instance", f.instance, "instance JSON")->required();
    cmd->add_option("--mode", f.mode, "weighted|lex")->capture_default_str();
    cmd->add_option("--variant", f.variant, "base|bounded")->capture_default_str();
    cmd->add_option("--strategy", f.strategy, "impact|wdeg|lex")->capture_default_str();
    cmd->add_option("--budget", f.budget, "wall-clock seconds, 0 for none")->capture_default_str();
    cmd->add_option("--nodes", f.nodes, "node budget, negative for none")->capture_default_str();
    cmd->add_flag("--no-switch-plus", f.no_switch_plus, "plain switch bound");
    cmd->add_flag("--no-symmetry", f.no_symmetry, "no column ordering constraints");
    cmd->add_option("--out", f.out, "write the plan here");
    cmd->add_option("--stats", f.stats, "write search statistics JSON here");
    if (full) {
        cmd->add_option("--phases", f.phases, "budget shares g,p,s,f");
        cmd->add_flag("--single-stage", f.single_stage, "one search over the full model");
    }
}

int finish(std::ostream& out, const Instance& inst, const SolveOutcome& r, const SolveFlags& f)
{
    print_summary(out, inst, r);
    if (!f.out.empty() && r.plan)
        write_checked_plan(inst, *r.plan, f.out);
    if (!f.stats.empty())
        write_text(f.stats, outcome_json(r).dump(2) + "\n");
    return exit_code(r.status);
}

int cmd_solve(const SolveFlags& f, std::ostream& out)
{
    const Instance inst = read_instance(f.instance);
    SolveOptions o = f.options();
    SolveOutcome r;
    if (f.single_stage) {
        r = solve(inst, o);
    } else {
        MultiStageOptions ms;
        ms.solve = o;
        if (!f.phases.empty())
            parse_phases(f.phases, ms);
        r = multi_stage(inst, ms);
    }
    return finish(out, inst, r, f);
}

int cmd_pack(const SolveFlags& f, std::ostream& out)
{
    const Instance inst = read_instance(f.instance);
    return finish(out, inst, solve_packing(inst, f.options()), f);
}

int cmd_sequence(const SolveFlags& f, std::ostream& out)
{
    const Instance inst = read_instance(f.instance);
    const Plan packing = read_plan(f.packing);
    if (packing.allocation.size() != inst.tests.size())
        throw InstanceError("packing allocates " + std::to_string(packing.allocation.size()) +
                            " tests, instance has " + std::to_string(inst.test_count()));
    const SolveOutcome r = solve_sequencing(inst, packing, f.options());
    const int code = finish(out, inst, r, f);
    // The order is proven optimal for this packing even though the instance
    // status stays FEASIBLE.
    return r.exhausted && r.plan ? exit_ok : code;
}

int cmd_verify(const std::string& instance_path, const std::string& plan_path, std::ostream& out)
{
    const Instance inst = read_instance(instance_path);
    const Plan plan = read_plan(plan_path);
    const auto problems = verify(inst, plan);
    for (const auto& p : problems)
        out << "violation: " << p << "\n";
    if (!problems.empty())
        return exit_failed;
    const ObjectiveValue v = objective(inst, plan, inst.test_count());
    out << "ok  configurations " << v.configurations << "  switches " << v.switches
        << "  weighted " << v.weighted << "\n";
    return exit_ok;
}

int cmd_gen(int n, const std::string& phase, std::uint64_t seed, int count,
            const std::string& dir, std::ostream& out)
{
    const Phase p = parse_phase(phase);
    std::filesystem::create_directories(dir);
    for (int k = 0; k < count; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        const Instance inst = generate(n, p, s);
        const std::string path = (std::filesystem::path(dir) / (inst.name + ".json")).string();
        write_instance(inst, path);
        out << path << "\n";
    }
    out << "generator " << generator_version << "\n";
    return exit_ok;
}

int cmd_oracle(const std::string& instance_path, std::ostream& out)
{
    const Instance inst = read_instance(instance_path);
    OracleResult r;
    try {
        r = oracle_plan(inst);
    } catch (const OracleGuardError& e) {
        const std::string what = e.what();
        if (what.find("no feasible") != std::string::npos) {
            out << "INFEASIBLE\n";
            return exit_failed;
        }
        throw InstanceError(what);
    }
    out << "lex       configurations " << r.configurations << "  switches " << r.switches << "\n";
    out << "weighted  " << r.weighted << "  (configurations " << r.weighted_configurations
        << ", switches " << r.weighted_switches << ")\n";
    return exit_ok;
}

struct BenchFlags {
    std::string classes;
    std::string seeds = "1..5";
    std::string modes = "weighted";
    std::string configs = "full";
    double budget = 60;
    long long nodes = -1;
    int jobs = 1;
    std::string out;
};

int cmd_bench(const BenchFlags& f, std::ostream& out)
{
    BenchRequest req;
    for (const auto& c : split(f.classes, ','))
        req.classes.push_back(parse_class(c));
    if (req.classes.empty())
        throw std::invalid_argument("--classes is empty");
    req.seeds = parse_seeds(f.seeds);
    req.modes.clear();
    for (const auto& m : split(f.modes, ','))
        req.modes.push_back(parse_mode(m));
    req.configs = split(f.configs, ',');
    for (const auto& c : req.configs)
        bench_config(c);
    req.budget = f.budget;
    req.nodes = f.nodes;
    req.jobs = std::max(1, f.jobs);

    const auto rows = run_bench(req);
    std::vector<std::string> lines;
    for (const auto& r : rows)
        lines.push_back(bench_csv_row(r));
    for (auto& a : bench_aggregate_rows(rows))
        lines.push_back(std::move(a));

    if (f.out.empty()) {
        out << bench_header << "\n";
        for (const auto& l : lines)
            out << l << "\n";
    } else {
        // Appending keeps earlier runs; the header goes in once.
        const bool fresh = !std::filesystem::exists(f.out) || std::filesystem::file_size(f.out) == 0;
        std::ofstream file(f.out, std::ios::app);
        if (!file)
            throw InstanceError("cannot write " + f.out);
        if (fresh)
            file << bench_header << "\n";
        for (const auto& l : lines)
            file << l << "\n";
        out << rows.size() << " rows written to " << f.out << "\n";
    }
    return exit_ok;
}

std::string fixed(double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

}  // namespace

int exit_code(Status status)
{
    switch (status) {
    case Status::Optimal: return exit_ok;
    case Status::Infeasible: return exit_failed;
    case Status::Feasible:
    case Status::Unknown: return exit_budget;
    }
    return exit_internal;
}

BenchConfig bench_config(const std::string& name)
{
    BenchConfig c;
    c.name = name;
    if (name == "full")
        return c;
    if (name == "base") {
        c.variant = Variant::Base;
        return c;
    }
    if (name == "wdeg") {
        c.heuristic = Heuristic::Wdeg;
        return c;
    }
    if (name == "single") {
        c.multi_stage = false;
        return c;
    }
    if (name == "cm-tsp") {
        c.baseline = true;
        c.multi_stage = false;
        return c;
    }
    throw std::invalid_argument("unknown bench config '" + name +
                                "' (full, base, wdeg, single, cm-tsp)");
}

std::string BenchClass::label() const
{
    return std::to_string(tests) + "-" + to_string(phase);
}

BenchClass parse_class(const std::string& text)
{
    const auto dash = text.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("class must look like 30-cold, got '" + text + "'");
    BenchClass c;
    std::size_t used = 0;
    c.tests = std::stoi(text.substr(0, dash), &used);
    if (used != dash)
        throw std::invalid_argument("bad test count in class '" + text + "'");
    c.phase = parse_phase(text.substr(dash + 1));
    class_params(c.tests, c.phase, 0);  // rejects unknown sizes
    return c;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text)
{
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad seed '" + s + "'");
        return static_cast<std::uint64_t>(v);
    };
    std::vector<std::uint64_t> out;
    const auto range = text.find("..");
    if (range != std::string::npos) {
        const std::uint64_t lo = number(text.substr(0, range));
        const std::uint64_t hi = number(text.substr(range + 2));
        if (hi < lo || hi - lo > 1000000)
            throw std::invalid_argument("bad seed range '" + text + "'");
        for (std::uint64_t s = lo; s <= hi; ++s)
            out.push_back(s);
        return out;
    }
    for (const auto& s : split(text, ','))
        out.push_back(number(s));
    if (out.empty())
        throw std::invalid_argument("no seeds given");
    return out;
}

namespace {

BenchRow run_one(const BenchClass& cls, std::uint64_t seed, ObjectiveMode mode,
                 const BenchConfig& config, double budget, long long nodes)
{
    BenchRow row;
    row.cls = cls;
    row.seed = seed;
    row.mode = mode;
    row.config = config;
    row.budget = budget;
    row.node_budget = nodes;
    const Instance inst = generate(cls.tests, cls.phase, seed);
    const auto start = Clock::now();
    if (config.baseline) {
        const Plan plan = packing_then_tsp(inst);
        row.outcome.plan = plan;
        row.outcome.value = objective(inst, plan, inst.test_count());
        row.outcome.status = Status::Feasible;
    } else {
        SolveOptions o;
        o.model.mode = mode;
        o.model.variant = config.variant;
        o.heuristic = config.heuristic;
        if (budget > 0)
            o.budget.seconds = budget;
        o.budget.nodes = nodes;
        if (config.multi_stage) {
            MultiStageOptions ms;
            ms.solve = o;
            row.outcome = multi_stage(inst, ms);
        } else {
            row.outcome = solve(inst, o);
        }
    }
    row.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchRequest& request)
{
    struct Job {
        BenchClass cls;
        std::uint64_t seed;
        ObjectiveMode mode;
        BenchConfig config;
    };
    std::vector<Job> jobs;
    for (const auto& cls : request.classes)
        for (ObjectiveMode mode : request.modes)
            for (const auto& name : request.configs)
                for (std::uint64_t seed : request.seeds)
                    jobs.push_back({cls, seed, mode, bench_config(name)});

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) {
            try {
                const Job& j = jobs[k];
                rows[k] = run_one(j.cls, j.seed, j.mode, j.config, request.budget, request.nodes);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(request.jobs, static_cast<int>(jobs.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::string bench_csv_row(const BenchRow& row)
{
    const SolveOutcome& r = row.outcome;
    const std::string strategy = row.config.baseline ? "cm-tsp" : to_string(row.config.heuristic);
    const std::string variant = row.config.baseline ? "-" : to_string(row.config.variant);
    const std::string stages = row.config.baseline ? "-" : row.config.multi_stage ? "multi" : "single";
    std::ostringstream s;
    s << row.cls.label() << ',' << row.seed << ',' << to_string(row.mode) << ',' << strategy << ','
      << variant << ',';
    if (r.value)
        s << r.value->configurations << ',' << r.value->switches << ',';
    else
        s << ",,";
    s << to_string(r.status) << ',' << r.stats.nodes << ',' << r.stats.fails << ','
      << fixed(row.millis, 1) << ',' << row.config.name << ',' << stages << ',';
    if (r.value)
        s << r.value->weighted;
    s << ',' << (row.budget > 0 ? fixed(row.budget, 1) : std::string("inf")) << ','
      << row.node_budget << ',' << generator_version;
    return s.str();
}

std::vector<std::string> bench_aggregate_rows(const std::vector<BenchRow>& rows)
{
    struct Acc {
        const BenchRow* first = nullptr;
        int count = 0, solved = 0, optimal = 0;
        double conf = 0, sw = 0, weighted = 0, millis = 0;
        long long nodes = 0, fails = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Acc> acc;
    for (const auto& row : rows) {
        const std::string key = row.cls.label() + '|' + to_string(row.mode) + '|' + row.config.name;
        auto [it, fresh] = acc.try_emplace(key);
        if (fresh)
            order.push_back(key);
        Acc& a = it->second;
        if (!a.first)
            a.first = &row;
        ++a.count;
        a.millis += row.millis;
        a.nodes += row.outcome.stats.nodes;
        a.fails += row.outcome.stats.fails;
        if (row.outcome.status == Status::Optimal)
            ++a.optimal;
        if (row.outcome.value) {
            ++a.solved;
            a.conf += row.outcome.value->configurations;
            a.sw += static_cast<double>(row.outcome.value->switches);
            a.weighted += static_cast<double>(row.outcome.value->weighted);
        }
    }
    std::vector<std::string> out;
    for (const auto& key : order) {
        const Acc& a = acc.at(key);
        const BenchRow& row = *a.first;
        const double d = std::max(1, a.solved);
        const std::string strategy = row.config.baseline ? "cm-tsp" : to_string(row.config.heuristic);
        const std::string variant = row.config.baseline ? "-" : to_string(row.config.variant);
        const std::string stages = row.config.baseline ? "-" : row.config.multi_stage ? "multi" : "single";
        std::ostringstream s;
        s << row.cls.label() << ",mean," << to_string(row.mode) << ',' << strategy << ',' << variant
          << ',' << fixed(a.conf / d, 2) << ',' << fixed(a.sw / d, 2) << ",optimal=" << a.optimal
          << '/' << a.count << ',' << a.nodes / a.count << ',' << a.fails / a.count << ','
          << fixed(a.millis / a.count, 1) << ',' << row.config.name << ',' << stages << ','
          << fixed(a.weighted / d, 2) << ','
          << (row.budget > 0 ? fixed(row.budget, 1) : std::string("inf")) << ','
          << row.node_budget << ',' << generator_version;
        out.push_back(s.str());
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Test campaign planner: packs tests into configurations and orders them"};
    app.require_subcommand(1);

    SolveFlags solve_f, pack_f, seq_f;
    add_solve_flags(app.add_subcommand("solve", "minimize configurations and switches"), solve_f, true);
    add_solve_flags(app.add_subcommand("pack", "minimize configurations only"), pack_f, false);
    auto* seq = app.add_subcommand("sequence", "order and complete a given packing");
    add_solve_flags(seq, seq_f, false);
    seq->add_option("--packing", seq_f.packing, "plan JSON whose allocation is kept")->required();

    std::string verify_instance, verify_plan;
    auto* ver = app.add_subcommand("verify", "check a plan against an instance");
    ver->add_option("instance", verify_instance)->required();
    ver->add_option("plan", verify_plan)->required();

    int gen_n = 30, gen_count = 1;
    std::string gen_phase = "cold", gen_dir = ".";
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "write generated instances");
    gen->add_option("--n", gen_n, "30, 50, 80, 100, 200 or 300")->required();
    gen->add_option("--phase", gen_phase, "hot|cold")->capture_default_str();
    gen->add_option("--seed", gen_seed, "first seed")->capture_default_str();
    gen->add_option("--count", gen_count, "instances, seeds seed..seed+count-1")->capture_default_str();
    gen->add_option("--out-dir", gen_dir)->capture_default_str();

    BenchFlags bench_f;
    auto* bench = app.add_subcommand("bench", "solve generated classes and report CSV");
    bench->add_option("--classes", bench_f.classes, "e.g. 30-cold,50-hot")->required();
    bench->add_option("--seeds", bench_f.seeds, "1..5 or 1,2,7")->capture_default_str();
    bench->add_option("--modes", bench_f.modes, "weighted,lex")->capture_default_str();
    bench->add_option("--configs", bench_f.configs, "full,base,wdeg,single,cm-tsp")->capture_default_str();
    bench->add_option("--budget", bench_f.budget, "seconds per solve, 0 for none")->capture_default_str();
    bench->add_option("--nodes", bench_f.nodes, "node budget per solve")->capture_default_str();
    bench->add_option("--jobs", bench_f.jobs, "concurrent solves")->capture_default_str();
    bench->add_option("--out", bench_f.out, "CSV file, appended to");

    std::string oracle_instance;
    auto* orc = app.add_subcommand("oracle", "exact optimum by enumeration (tiny instances)");
    orc->add_option("instance", oracle_instance)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_invalid;
    }

    try {
        if (app.got_subcommand("solve"))
            return cmd_solve(solve_f, out);
        if (app.got_subcommand("pack"))
            return cmd_pack(pack_f, out);
        if (app.got_subcommand("sequence"))
            return cmd_sequence(seq_f, out);
        if (app.got_subcommand("verify"))
            return cmd_verify(verify_instance, verify_plan, out);
        if (app.got_subcommand("gen"))
            return cmd_gen(gen_n, gen_phase, gen_seed, gen_count, gen_dir, out);
        if (app.got_subcommand("bench"))
            return cmd_bench(bench_f, out);
        if (app.got_subcommand("oracle"))
            return cmd_oracle(oracle_instance, out);
    } catch (const InstanceError& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_invalid;
}

}  // namespace thermoplan
