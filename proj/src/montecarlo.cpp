#include "frob/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "frob/exact.hpp"

namespace frob {

namespace {

constexpr std::int64_t max_rejections = 1'000'000;
constexpr std::int64_t exact_entry_guard = 2000;
constexpr std::int64_t chunk_size = 2048;

bool pairwise_coprime(std::span<const std::int64_t> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (std::gcd(v[i], v[j]) != 1)
                return false;
    return true;
}

void check_config(const SimulationConfig& cfg) {
    if (cfg.iterations < 1)
        throw std::invalid_argument("simulation: iterations must be >= 1");
    if (cfg.dimension < 3)
        throw std::invalid_argument("simulation: dimension must be >= 3");
    if (cfg.max_entry < cfg.dimension)
        throw std::invalid_argument("simulation: max_entry below dimension");
    if (cfg.compute_exact && cfg.max_entry > exact_entry_guard)
        throw std::invalid_argument(
            "simulation: exact Frobenius computation capped at max_entry <= 2000");
}

ComparisonRecord make_record(const SimulationConfig& cfg, std::int64_t index) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(index));
    std::vector<std::int64_t> entries =
        sample_instance(rng, cfg.dimension, cfg.max_entry);
    std::optional<std::int64_t> f;
    if (cfg.compute_exact)
        f = frobenius_exact(Instance::validate(entries));
    return ComparisonRecord::make(entries[0], entries[1], entries[2], f);
}

} // namespace

std::vector<std::int64_t> sample_instance(SplitMix64& rng, int dimension,
                                          std::int64_t max_entry) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(dimension));
    for (std::int64_t rejected = 0; rejected <= max_rejections; ++rejected) {
        for (auto& x : v)
            x = rng.uniform(1, max_entry);
        std::sort(v.begin(), v.end());
        if (pairwise_coprime(v))
            return v;
    }
    throw std::runtime_error(
        "sample_instance: rejection budget exhausted; max_entry admits too few "
        "pairwise coprime vectors");
}

std::array<std::int64_t, 3> sample_triple(SplitMix64& rng,
                                          std::int64_t max_entry) {
    const auto v = sample_instance(rng, 3, max_entry);
    return {v[0], v[1], v[2]};
}

void run_simulation(const SimulationConfig& cfg,
                    const std::function<void(const ComparisonRecord&)>& sink) {
    check_config(cfg);
    int workers = cfg.workers;
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? static_cast<int>(hw) : 1;
    }

    if (workers == 1) {
        for (std::int64_t i = 0; i < cfg.iterations; ++i)
            sink(make_record(cfg, i));
        return;
    }

    // Chunked map over iteration indices; the collector drains futures in
    // chunk order, so output never depends on worker count and at most
    // `workers` chunks are in memory at a time.
    const std::int64_t chunks = (cfg.iterations + chunk_size - 1) / chunk_size;
    std::vector<std::future<std::vector<ComparisonRecord>>> window;
    std::int64_t next_chunk = 0;
    std::int64_t drained = 0;
    const auto launch = [&](std::int64_t chunk) {
        const std::int64_t begin = chunk * chunk_size;
        const std::int64_t end = std::min(begin + chunk_size, cfg.iterations);
        return std::async(std::launch::async, [&cfg, begin, end]() {
            std::vector<ComparisonRecord> out;
            out.reserve(static_cast<std::size_t>(end - begin));
            for (std::int64_t i = begin; i < end; ++i)
                out.push_back(make_record(cfg, i));
            return out;
        });
    };
    while (next_chunk < chunks &&
           next_chunk < static_cast<std::int64_t>(workers))
        window.push_back(launch(next_chunk++));
    while (drained < chunks) {
        auto records = window.front().get();
        window.erase(window.begin());
        ++drained;
        if (next_chunk < chunks)
            window.push_back(launch(next_chunk++));
        for (const auto& rec : records)
            sink(rec);
    }
}

std::vector<ComparisonRecord> run_simulation(const SimulationConfig& cfg) {
    std::vector<ComparisonRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.iterations));
    run_simulation(cfg, [&records](const ComparisonRecord& rec) {
        records.push_back(rec);
    });
    return records;
}

const char* axis_name(Axis axis) {
    switch (axis) {
    case Axis::A3: return "a3";
    case Axis::Prod12: return "prod12";
    case Axis::Prod123: return "prod123";
    case Axis::Sum: return "sum";
    }
    return "?";
}

std::int64_t axis_key(const ComparisonRecord& rec, Axis axis) {
    switch (axis) {
    case Axis::A3: return rec.a3;
    case Axis::Prod12: return rec.prod12;
    case Axis::Prod123: return rec.prod123;
    case Axis::Sum: return rec.sum;
    }
    return 0;
}

std::vector<AggregateRow> aggregate(std::span<const ComparisonRecord> records,
                                    Axis axis, std::int64_t bucket_width) {
    if (records.empty())
        throw std::invalid_argument("aggregate: no records");
    struct Acc {
        std::int64_t count = 0;
        double min = 0.0, max = 0.0, sum = 0.0;
    };
    std::map<std::int64_t, Acc> buckets;
    for (const auto& rec : records) {
        std::int64_t key = axis_key(rec, axis);
        if (bucket_width > 0)
            key = (key / bucket_width) * bucket_width;
        auto& acc = buckets[key];
        if (acc.count == 0) {
            acc.min = acc.max = rec.gap;
        } else {
            acc.min = std::min(acc.min, rec.gap);
            acc.max = std::max(acc.max, rec.gap);
        }
        acc.sum += rec.gap;
        ++acc.count;
    }
    std::vector<AggregateRow> rows;
    rows.reserve(buckets.size());
    for (const auto& [key, acc] : buckets) {
        AggregateRow row;
        row.axis = axis;
        row.bucket = key;
        row.count = acc.count;
        row.min_gap = acc.min;
        row.max_gap = acc.max;
        row.mean_gap = acc.sum / static_cast<double>(acc.count);
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
            ++j;
        const double avg = static_cast<double>(i + j) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman: need two equal-length series");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    if (vx == 0.0 || vy == 0.0)
        throw std::invalid_argument("spearman: constant series");
    return cov / std::sqrt(vx * vy);
}

} // namespace frob
