#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ylat/identities.hpp"

namespace ylat {

/// SplitMix64 output mixer; the per-trial stream rule below builds on it.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial number `index` (0-based) of a run with base seed `seed`:
///   splitmix64(seed ^ (0x9E3779B97F4A7C15 * (index + 1))).
/// Trials are therefore independent of execution order and reproducible
/// across platforms (the engine is std::mt19937_64, whose output sequence
/// the language standard pins down; uniform doubles are taken as the top
/// 53 bits of the raw output rather than through a distribution object).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// One sampled growth path: empty = d[0] -> d[1] -> ... -> d[N].
struct PathSample {
    MeasureSpec measure;
    std::uint64_t seed = 0;
    std::vector<Partition> diagrams;
};

/// Draws N forward steps of the measure's growth walk. Successor
/// probabilities are computed exactly and checked to sum to exactly 1;
/// only the categorical draw itself uses floating point.
PathSample grow_path(const MeasureSpec& measure, long steps, std::uint64_t seed);

/// Empirical distribution of the step at which `box` first appears.
struct EntryHistogram {
    Box box;
    long trials = 0;
    long steps = 0;
    std::map<long, long> counts;  // entry step -> number of trials
    long not_reached = 0;         // trials whose path never covered the box
};

EntryHistogram entry_distribution(const MeasureSpec& measure, Box box, long steps, long trials,
                                  std::uint64_t seed);

/// Per-step comparison of the histogram against the exact entry
/// probabilities; z is the binomial standardized deviation (0 whenever the
/// exact probability is 0 or 1).
struct ComparisonRow {
    long n = 0;
    long count = 0;
    double empirical = 0.0;
    double analytic = 0.0;
    double z_score = 0.0;
};

std::vector<ComparisonRow> compare_empirical_analytic(const EntryHistogram& hist,
                                                      const MeasureSpec& measure);

}  // namespace ylat
