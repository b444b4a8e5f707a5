#include "ylat/sampler.hpp"

#include <cmath>
#include <random>

namespace ylat {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

namespace {

struct SuccessorTable {
    std::vector<Partition> successors;
    std::vector<double> cumulative;  // last entry forced to 1
};

// Exact transition probabilities, converted to a cumulative double table
// once per distinct diagram. Confined to one sampling run.
class WalkCache {
  public:
    explicit WalkCache(const MeasureSpec& measure) : measure_(measure) {}

    const SuccessorTable& table(const Partition& mu) {
        auto it = tables_.find(mu);
        if (it != tables_.end()) return it->second;
        SuccessorTable t;
        Rational total(0);
        for (Box b : addable_boxes(mu)) {
            Partition la = mu.with_box(b);
            Rational p = transition(measure_, mu, la);
            total += p;
            t.successors.push_back(std::move(la));
            t.cumulative.push_back(to_double(total));
        }
        if (total != 1) throw Error("transition probabilities do not sum to 1");
        t.cumulative.back() = 1.0;
        return tables_.emplace(mu, std::move(t)).first->second;
    }

  private:
    MeasureSpec measure_;
    std::map<Partition, SuccessorTable> tables_;
};

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Partition walk_step(WalkCache& cache, const Partition& mu, std::mt19937_64& eng) {
    const SuccessorTable& t = cache.table(mu);
    double u = uniform01(eng);
    std::size_t lo = 0;
    while (lo + 1 < t.cumulative.size() && u >= t.cumulative[lo]) ++lo;
    return t.successors[lo];
}

}  // namespace

PathSample grow_path(const MeasureSpec& measure, long steps, std::uint64_t seed) {
    if (steps < 0) throw Error("steps must be >= 0");
    PathSample sample;
    sample.measure = measure;
    sample.seed = seed;
    sample.diagrams.reserve(static_cast<std::size_t>(steps) + 1);
    sample.diagrams.emplace_back();
    WalkCache cache(measure);
    std::mt19937_64 eng(seed);
    for (long i = 0; i < steps; ++i)
        sample.diagrams.push_back(walk_step(cache, sample.diagrams.back(), eng));
    return sample;
}

EntryHistogram entry_distribution(const MeasureSpec& measure, Box box, long steps, long trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw Error("trials must be >= 1");
    if (steps < 0) throw Error("steps must be >= 0");
    EntryHistogram hist;
    hist.box = box;
    hist.trials = trials;
    hist.steps = steps;
    WalkCache cache(measure);
    for (long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 eng(trial_seed(seed, static_cast<std::uint64_t>(trial)));
        Partition current;
        long entered = 0;
        for (long n = 1; n <= steps; ++n) {
            current = walk_step(cache, current, eng);
            if (current.contains(box)) {
                entered = n;
                break;
            }
        }
        if (entered > 0)
            hist.counts[entered] += 1;
        else
            hist.not_reached += 1;
    }
    return hist;
}

std::vector<ComparisonRow> compare_empirical_analytic(const EntryHistogram& hist,
                                                      const MeasureSpec& measure) {
    std::vector<ComparisonRow> rows;
    for (const auto& [n, count] : hist.counts) {
        ComparisonRow row;
        row.n = n;
        row.count = count;
        row.empirical = static_cast<double>(count) / static_cast<double>(hist.trials);
        Rational p = box_probability_term(measure, hist.box, n);
        row.analytic = to_double(p);
        if (p > 0 && p < 1) {
            double se = std::sqrt(row.analytic * (1.0 - row.analytic) /
                                  static_cast<double>(hist.trials));
            row.z_score = (row.empirical - row.analytic) / se;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ylat
