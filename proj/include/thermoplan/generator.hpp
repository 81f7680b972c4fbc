#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "thermoplan/instance.hpp"

namespace thermoplan {

/// Pinned generator identity, written next to generated instances.
inline constexpr const char* generator_version = "mt19937_64/v1";

enum class Phase { Hot, Cold };
std::string to_string(Phase p);
Phase parse_phase(const std::string& text);

/// Capacity ratio of a phase: 0.6 hot, 0.4 cold.
double phase_ratio(Phase p);

/// Unbiased integer in [0, bound) by rejection on the raw 64-bit stream, so
/// the sequence does not depend on a standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct GeneratorParams {
    int tests = 0;
    int units = 0;       // split into `constraints` scopes whose sizes differ by <= 1
    int constraints = 1;
    double ratio = 0.5;  // capacity = max(1, round(ratio * scope size))
    int min_scopes = 1;  // scopes touched per test, drawn uniformly in [min, max]
    int max_scopes = 1;
    bool cover_units = true;  // reassign so every unit is used by some test
    std::uint64_t seed = 0;
    std::string name;
};

/// Any parameter mix; each test takes one uniform unit from each of its
/// distinct, uniformly drawn scopes. Throws std::invalid_argument on
/// inconsistent parameters.
Instance generate(const GeneratorParams& params);

/// Benchmark classes: n in {30, 50, 80, 100, 200, 300}. Three scopes and two
/// per test for n <= 50, otherwise five scopes and two or three per test;
/// units = round(n / 4) rounded up to a multiple of the scope count.
GeneratorParams class_params(int tests, Phase phase, std::uint64_t seed);
Instance generate(int tests, Phase phase, std::uint64_t seed);

/// "g-<n>-<phase>-<seed>".
std::string class_instance_name(int tests, Phase phase, std::uint64_t seed);

}  // namespace thermoplan
