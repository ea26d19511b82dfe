#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdice/tournament.hpp"

namespace qdice {

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    int dice_count = 3;
};

/// One die drawn uniformly from the moment polytope: pick one of its
/// triangles with probability proportional to area, then a point by a
/// reflected pair of barycentric coordinates. All randomness enters as
/// exact dyadic rationals r/2^64 built from raw mt19937_64 draws, so a
/// seed fully determines the sample on every platform.
Die sample_die(std::mt19937_64& rng);

struct ClassEstimate {
    std::string label;
    std::uint64_t count = 0;
    double frequency = 0;
    double exact = 0;
    double std_error = 0;
    double z = 0;
};

struct EstimateReport {
    SamplerConfig config;
    int workers = 1;
    std::uint64_t tie_count = 0;
    std::vector<ClassEstimate> classes;
};

/// Class display names in classify enum order (2 entries for three dice,
/// 4 for four dice).
const std::vector<std::string>& class_labels(int dice_count);

/// Simulates config.trials tournaments and compares class frequencies
/// against the given exact probabilities (classify enum order). Trials are
/// split across `workers` independent streams derived from (seed, worker
/// index) and merged in worker order, so the report depends only on
/// (seed, trials, workers), never on `threads`.
EstimateReport estimate(const SamplerConfig& config, const std::vector<Rational>& exact_probs,
                        int workers = 1, int threads = 1);

}  // namespace qdice
