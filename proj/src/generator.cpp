#include "thermoplan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thermoplan {

std::string to_string(Phase p)
{
    return p == Phase::Hot ? "hot" : "cold";
}

Phase parse_phase(const std::string& text)
{
    if (text == "hot")
        return Phase::Hot;
    if (text == "cold")
        return Phase::Cold;
    throw std::invalid_argument("phase must be hot or cold, got '" + text + "'");
}

double phase_ratio(Phase p)
{
    return p == Phase::Hot ? 0.6 : 0.4;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below needs a positive bound");
    // Largest multiple of bound representable in the stream; draws above it
    // are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

namespace {

long long round_half_up(double x)
{
    return static_cast<long long>(std::floor(x + 0.5 + 1e-9));
}

}  // namespace

Instance generate(const GeneratorParams& p)
{
    if (p.tests < 0 || p.units < 1 || p.constraints < 1 || p.constraints > p.units)
        throw std::invalid_argument("generator needs tests >= 0 and 1 <= constraints <= units");
    if (p.min_scopes < 1 || p.max_scopes < p.min_scopes || p.max_scopes > p.constraints)
        throw std::invalid_argument("generator needs 1 <= min_scopes <= max_scopes <= constraints");
    if (!(p.ratio > 0 && p.ratio <= 1))
        throw std::invalid_argument("generator ratio must lie in (0, 1]");

    std::mt19937_64 rng(p.seed);
    Instance inst;
    inst.name = p.name;
    inst.units = p.units;
    const int K = p.constraints;
    int next = 0;
    for (int c = 0; c < K; ++c) {
        const int size = p.units / K + (c < p.units % K ? 1 : 0);
        ThermalConstraint tc;
        for (int k = 0; k < size; ++k)
            tc.scope.push_back(next++);
        tc.capacity = static_cast<int>(std::max(1LL, round_half_up(p.ratio * size)));
        inst.thermal.push_back(std::move(tc));
    }

    std::vector<int> order(K);
    for (int t = 0; t < p.tests; ++t) {
        const int span = p.max_scopes - p.min_scopes + 1;
        const int count = p.min_scopes + static_cast<int>(uniform_below(rng, span));
        // Partial Fisher-Yates: the first `count` entries are the chosen scopes.
        for (int c = 0; c < K; ++c)
            order[c] = c;
        for (int k = 0; k < count; ++k) {
            const int j = k + static_cast<int>(uniform_below(rng, K - k));
            std::swap(order[k], order[j]);
        }
        UnitSet test;
        for (int k = 0; k < count; ++k) {
            const auto& scope = inst.thermal[order[k]].scope;
            test.push_back(scope[uniform_below(rng, scope.size())]);
        }
        std::sort(test.begin(), test.end());
        inst.tests.push_back(std::move(test));
    }

    if (p.cover_units && p.tests > 0) {
        std::vector<int> uses(p.units, 0);
        for (const auto& test : inst.tests)
            for (int u : test)
                ++uses[u];
        std::vector<int> owner(p.units);
        for (int c = 0; c < K; ++c)
            for (int u : inst.thermal[c].scope)
                owner[u] = c;
        for (int u = 0; u < p.units; ++u) {
            if (uses[u] > 0)
                continue;
            // Swap u in for a scope-mate that other tests still use.
            std::vector<std::pair<int, int>> spots;
            for (int t = 0; t < p.tests; ++t)
                for (int v : inst.tests[t])
                    if (owner[v] == owner[u] && uses[v] >= 2)
                        spots.emplace_back(t, v);
            if (spots.empty())
                continue;
            const auto [t, v] = spots[uniform_below(rng, spots.size())];
            auto& test = inst.tests[t];
            *std::find(test.begin(), test.end(), v) = u;
            std::sort(test.begin(), test.end());
            --uses[v];
            ++uses[u];
        }
    }
    return inst;
}

std::string class_instance_name(int tests, Phase phase, std::uint64_t seed)
{
    return "g-" + std::to_string(tests) + "-" + to_string(phase) + "-" + std::to_string(seed);
}

GeneratorParams class_params(int tests, Phase phase, std::uint64_t seed)
{
    static const int classes[] = {30, 50, 80, 100, 200, 300};
    if (std::find(std::begin(classes), std::end(classes), tests) == std::end(classes))
        throw std::invalid_argument("test count must be one of 30, 50, 80, 100, 200, 300");
    const bool small = tests <= 50;
    GeneratorParams p;
    p.tests = tests;
    p.constraints = small ? 3 : 5;
    const long long quarter = round_half_up(tests / 4.0);
    p.units = static_cast<int>((quarter + p.constraints - 1) / p.constraints * p.constraints);
    p.ratio = phase_ratio(phase);
    p.min_scopes = 2;
    p.max_scopes = small ? 2 : 3;
    p.cover_units = true;
    p.seed = seed;
    p.name = class_instance_name(tests, phase, seed);
    return p;
}

Instance generate(int tests, Phase phase, std::uint64_t seed)
{
    return generate(class_params(tests, phase, seed));
}

}  // namespace thermoplan
