// Timed and counted trials: every (algorithm, generator, size, trial)
// cell sorts a deterministically generated input and records comparison
// and swap/move counts, optionally with wall time around the sort call.
// Counters are identical across runs and platforms; only elapsed_ns may
// differ.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "twinsort/baselines.hpp"
#include "twinsort/generate.hpp"
#include "twinsort/rng.hpp"
#include "twinsort/twin_sort.hpp"

namespace twinsort {

enum class Algo { Twin, Insertion, Merge, Quick };

inline constexpr Algo kAllAlgos[] = {Algo::Twin, Algo::Insertion, Algo::Merge,
                                     Algo::Quick};

inline std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::Twin: return "twin";
        case Algo::Insertion: return "insertion";
        case Algo::Merge: return "merge";
        case Algo::Quick: return "quick";
    }
    return "unknown";
}

inline std::optional<Algo> parse_algo(std::string_view name) {
    for (Algo algo : kAllAlgos)
        if (name == algo_name(algo)) return algo;
    return std::nullopt;
}

struct BenchConfig {
    std::vector<Algo> algorithms;
    std::vector<GeneratorKind> generators;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    bool measure_time = false;
};

struct BenchRecord {
    Algo algo = Algo::Twin;
    GeneratorKind generator = GeneratorKind::Sorted;
    std::size_t n = 0;
    std::uint64_t seed = 0;  // effective per-trial seed
    std::uint64_t trial = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::optional<std::uint64_t> elapsed_ns;
};

// Per-trial seeds: trial t takes the t-th output of the splitmix64 stream
// seeded from config.seed. Shared across cells, so every algorithm sees
// the same inputs for a given (generator, n, trial).
inline std::vector<std::uint64_t> trial_seeds(std::uint64_t config_seed,
                                              std::uint64_t trials) {
    std::vector<std::uint64_t> seeds(trials);
    SplitMix64 rng(config_seed);
    for (std::uint64_t t = 0; t < trials; ++t) seeds[t] = rng.next();
    return seeds;
}

inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.trials < 1)
        throw std::invalid_argument("run_bench: trials must be >= 1");
    if (config.sizes.empty())
        throw std::invalid_argument("run_bench: sizes must be non-empty");
    if (config.algorithms.empty())
        throw std::invalid_argument("run_bench: algorithms must be non-empty");
    if (config.generators.empty())
        throw std::invalid_argument("run_bench: generators must be non-empty");

    const std::vector<std::uint64_t> seeds =
        trial_seeds(config.seed, config.trials);

    std::vector<BenchRecord> records;
    records.reserve(config.algorithms.size() * config.generators.size() *
                    config.sizes.size() * config.trials);
    for (Algo algo : config.algorithms) {
        for (GeneratorKind gen : config.generators) {
            for (std::size_t n : config.sizes) {
                for (std::uint64_t t = 0; t < config.trials; ++t) {
                    std::vector<std::int64_t> data =
                        generate(gen, n, seeds[t]);
                    BenchRecord rec;
                    rec.algo = algo;
                    rec.generator = gen;
                    rec.n = n;
                    rec.seed = seeds[t];
                    rec.trial = t;

                    const auto start = std::chrono::steady_clock::now();
                    switch (algo) {
                        case Algo::Twin: {
                            const SortStats stats = twin_sort(data);
                            rec.comparisons = stats.comparisons;
                            rec.swaps = stats.swaps;
                            break;
                        }
                        case Algo::Insertion: {
                            const BaselineCounts counts =
                                insertion_sort(std::span(data));
                            rec.comparisons = counts.comparisons;
                            rec.swaps = counts.moves;
                            break;
                        }
                        case Algo::Merge: {
                            const BaselineCounts counts =
                                merge_sort(std::span(data));
                            rec.comparisons = counts.comparisons;
                            rec.swaps = counts.moves;
                            break;
                        }
                        case Algo::Quick: {
                            const BaselineCounts counts =
                                quick_sort(std::span(data));
                            rec.comparisons = counts.comparisons;
                            rec.swaps = counts.moves;
                            break;
                        }
                    }
                    if (config.measure_time) {
                        const auto stop = std::chrono::steady_clock::now();
                        rec.elapsed_ns = static_cast<std::uint64_t>(
                            std::chrono::duration_cast<
                                std::chrono::nanoseconds>(stop - start)
                                .count());
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

inline constexpr std::string_view kBenchCsvHeader =
    "algo,generator,n,seed,trial,comparisons,swaps,elapsed_ns";

// One row per record; the elapsed_ns column stays empty when timing was
// disabled.
inline void write_bench_csv(std::ostream& os,
                            const std::vector<BenchRecord>& records) {
    os << kBenchCsvHeader << '\n';
    for (const BenchRecord& rec : records) {
        os << algo_name(rec.algo) << ',' << generator_name(rec.generator)
           << ',' << rec.n << ',' << rec.seed << ',' << rec.trial << ','
           << rec.comparisons << ',' << rec.swaps << ',';
        if (rec.elapsed_ns) os << *rec.elapsed_ns;
        os << '\n';
    }
}

}  // namespace twinsort
