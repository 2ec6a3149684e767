#ifndef FROB_MONTECARLO_HPP
#define FROB_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "frob/analysis.hpp"
#include "frob/rng.hpp"

namespace frob {

// Fully determines a simulation run: identical configs produce
// byte-identical record streams regardless of worker count.
struct SimulationConfig {
    std::uint64_t seed = 0;
    std::int64_t iterations = 100000;
    int dimension = 3;            // >= 3; bounds use the three smallest
    std::int64_t max_entry = 1000;
    bool compute_exact = false;   // requires max_entry <= 2000
    int workers = 0;              // 0 = hardware concurrency
};

// Rejection sampling: draw `dimension` integers uniformly from
// [1, max_entry], sort, accept iff pairwise coprime. Sampling law is ours;
// the source study never states one, which shapes all density-dependent
// figures. Throws after 10^6 consecutive rejections.
std::vector<std::int64_t> sample_instance(SplitMix64& rng, int dimension,
                                          std::int64_t max_entry);
std::array<std::int64_t, 3> sample_triple(SplitMix64& rng,
                                          std::int64_t max_entry);

// Streams exactly cfg.iterations records, ordered by iteration index.
// Record i is a pure function of (cfg.seed, i); iterations are partitioned
// into chunks processed in parallel and merged in index order.
void run_simulation(const SimulationConfig& cfg,
                    const std::function<void(const ComparisonRecord&)>& sink);
std::vector<ComparisonRecord> run_simulation(const SimulationConfig& cfg);

enum class Axis { A3, Prod12, Prod123, Sum };

const char* axis_name(Axis axis);
std::int64_t axis_key(const ComparisonRecord& rec, Axis axis);

struct AggregateRow {
    Axis axis = Axis::A3;
    std::int64_t bucket = 0;
    std::int64_t count = 0;
    double min_gap = 0.0;
    double max_gap = 0.0;
    double mean_gap = 0.0;
};

// Buckets records by exact key value (bucket_width = 0), or by
// floor(key / width) * width, and emits per-bucket gap statistics sorted
// by key. Empty input is a usage error.
std::vector<AggregateRow> aggregate(std::span<const ComparisonRecord> records,
                                    Axis axis, std::int64_t bucket_width = 0);

// Spearman rank correlation with average ranks at ties.
double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y);

} // namespace frob

#endif
