#pragma once

#include <cstdint>

#include "pythag/ingest.hpp"

namespace pythag {

/// Configuration for a synthetic season under the exact won-loss model.
///
/// Randomness is fully pinned for reproducibility: a std::mt19937_64 engine
/// seeded with `seed`, 53-bit uniforms taken from the high bits of each
/// engine word, normals via Box-Muller, binomial wins by counting uniform
/// draws below p. Experiments derive the seed for run k as seed ^ k.
struct SimConfig {
    int n_teams = 30;
    int games = 162;
    double true_gamma = 1.82;
    double r_ave = 4.5;   // runs per game
    double spread = 0.35; // dispersion of team run rates, runs per game
    bool balance = true;  // shift rates so league runs scored == runs allowed
    std::uint64_t seed = 42;
};

/// Draw team run rates around r_ave (truncated positive), wins from a
/// binomial with the exact-formula probability, and emit integer season
/// totals. The dataset's r_ave is recomputed from the rounded totals.
SeasonDataset simulate_season(const SimConfig& cfg);

struct CoverageResult {
    int runs = 0;
    int covered = 0;
    double fraction = 0.0;
};

/// Repeat simulate -> fit -> gamma interval (m = 1) with per-run seeds and
/// report how often the interval contains true_gamma. runs must be >= 100.
/// level is the nominal confidence level (e.g. 0.95).
CoverageResult coverage_experiment(const SimConfig& cfg, int runs, double level);

}  // namespace pythag
