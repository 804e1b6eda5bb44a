// Brute-force verification of the twin sort: every permutation of 1..n is
// sorted and checked for ordering, multiset preservation, the comparison
// bound, and termination safety (early exit must only ever fire on a fully
// sorted array). Exact-rational mean comparison counts come out of the
// same enumeration.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "twinsort/element.hpp"
#include "twinsort/rational.hpp"
#include "twinsort/reference_sort.hpp"
#include "twinsort/rng.hpp"
#include "twinsort/twin_sort.hpp"

namespace twinsort {

// 9! = 362,880 runs is the largest exhaustive sweep worth doing at a desk.
inline constexpr std::size_t kMaxVerifyN = 9;

enum class FailureKind {
    WrongOrder,
    NotPermutation,
    Unstable,
    UnsafeTermination,
    BoundExceeded,
};

inline const char* failure_kind_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::WrongOrder: return "wrong-order";
        case FailureKind::NotPermutation: return "not-permutation";
        case FailureKind::Unstable: return "unstable";
        case FailureKind::UnsafeTermination: return "unsafe-termination";
        case FailureKind::BoundExceeded: return "bound-exceeded";
    }
    return "unknown";
}

struct Failure {
    std::vector<int> input;
    FailureKind kind = FailureKind::WrongOrder;
};

struct VerificationReport {
    std::size_t n = 0;
    std::uint64_t permutations_checked = 0;
    std::vector<Failure> failures;  // lexicographic input order
    std::uint64_t max_comparisons = 0;
    Rational mean_comparisons;

    bool passed() const { return failures.empty(); }
};

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// rank-th permutation of 1..n in lexicographic order (factorial number
// system), rank in [0, n!).
inline std::vector<int> nth_permutation(std::size_t n, std::uint64_t rank) {
    std::vector<int> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i) + 1;
    std::vector<int> out;
    out.reserve(n);
    std::uint64_t radix = factorial(n);
    for (std::size_t i = n; i > 0; --i) {
        radix /= i;
        const std::size_t digit = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

// Sorter callables plug in here so the checker can also be aimed at
// deliberately broken variants (mutation tests).
struct TwinSorter {
    SortStats operator()(std::vector<int>& elems) const {
        return twin_sort(elems);
    }
};

namespace detail {

struct BatchResult {
    std::uint64_t checked = 0;
    std::uint64_t max_comparisons = 0;
    std::uint64_t comparison_sum = 0;
    std::vector<Failure> failures;
};

template <class Sorter>
BatchResult verify_batch(std::size_t n, std::uint64_t first_rank,
                         std::uint64_t last_rank, const Sorter& sorter) {
    BatchResult res;
    std::vector<int> perm = nth_permutation(n, first_rank);
    const std::uint64_t bound = static_cast<std::uint64_t>(n - 1) * n / 2;
    std::vector<int> work;
    for (std::uint64_t rank = first_rank; rank < last_rank; ++rank) {
        work = perm;
        const SortStats stats = sorter(work);
        ++res.checked;
        res.comparison_sum += stats.comparisons;
        res.max_comparisons = std::max(res.max_comparisons, stats.comparisons);

        const bool sorted = std::is_sorted(work.begin(), work.end());
        if (stats.terminated_early && !sorted)
            res.failures.push_back({perm, FailureKind::UnsafeTermination});
        if (!sorted)
            res.failures.push_back({perm, FailureKind::WrongOrder});
        // keys are exactly 1..n, so sorted output must be 1,2,...,n
        bool is_perm = work.size() == n;
        for (std::size_t i = 0; is_perm && i < n; ++i)
            is_perm = std::count(work.begin(), work.end(),
                                 static_cast<int>(i) + 1) == 1;
        if (!is_perm)
            res.failures.push_back({perm, FailureKind::NotPermutation});
        if (stats.comparisons > bound)
            res.failures.push_back({perm, FailureKind::BoundExceeded});

        std::next_permutation(perm.begin(), perm.end());
    }
    return res;
}

}  // namespace detail

// Runs the sorter over all n! permutations of 1..n. Work is split into
// contiguous lexicographic rank ranges; partial results merge in batch
// order, so the report is identical however the batches are scheduled.
// batches = 0 picks a batch count from hardware concurrency.
template <class Sorter = TwinSorter>
VerificationReport verify_permutations(std::size_t n, Sorter sorter = {},
                                       unsigned batches = 0) {
    if (n < 1 || n > kMaxVerifyN)
        throw std::invalid_argument("verify_permutations: n must be in 1.." +
                                    std::to_string(kMaxVerifyN));
    const std::uint64_t total = factorial(n);
    if (batches == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        batches = hw == 0 ? 1 : hw;
    }
    if (batches > total) batches = static_cast<unsigned>(total);

    std::vector<std::future<detail::BatchResult>> parts;
    parts.reserve(batches);
    for (unsigned b = 0; b < batches; ++b) {
        const std::uint64_t first = total * b / batches;
        const std::uint64_t last = total * (b + 1) / batches;
        parts.push_back(std::async(std::launch::async, [=, &sorter] {
            return detail::verify_batch(n, first, last, sorter);
        }));
    }

    VerificationReport report;
    report.n = n;
    std::uint64_t sum = 0;
    for (auto& part : parts) {
        detail::BatchResult res = part.get();
        report.permutations_checked += res.checked;
        report.max_comparisons =
            std::max(report.max_comparisons, res.max_comparisons);
        sum += res.comparison_sum;
        report.failures.insert(report.failures.end(),
                               std::make_move_iterator(res.failures.begin()),
                               std::make_move_iterator(res.failures.end()));
    }
    report.mean_comparisons = Rational::reduced(sum, total);
    return report;
}

// Exact mean comparison count over all n! permutations.
inline Rational empirical_average_comparisons(std::size_t n) {
    return verify_permutations(n).mean_comparisons;
}

// Randomized duplicate-key inputs for the stability check: keys drawn from
// a small alphabet, payload = input position.
struct DuplicateProfile {
    std::size_t distinct_keys = 3;
    std::size_t cases = 200;
    std::uint64_t seed = 0;
};

struct StabilityResult {
    bool passed = true;
    std::vector<int> first_failing_keys;  // empty when passed
};

inline StabilityResult stability_check(std::size_t n,
                                       const DuplicateProfile& profile = {}) {
    using Record = Keyed<int, std::size_t>;
    SplitMix64 rng(profile.seed);
    StabilityResult result;
    for (std::size_t c = 0; c < profile.cases; ++c) {
        std::vector<Record> input(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto key = rng.next() % std::max<std::uint64_t>(
                                              profile.distinct_keys, 1);
            input[i] = {static_cast<int>(key), i};
        }
        std::vector<Record> sorted = input;
        twin_sort(sorted, KeyLess{});
        const std::vector<Record> expected = reference_sort(input, KeyLess{});

        bool ok = sorted.size() == expected.size();
        for (std::size_t i = 0; ok && i < sorted.size(); ++i)
            ok = sorted[i].key == expected[i].key &&
                 sorted[i].payload == expected[i].payload;
        // payload order within equal keys, checked directly as well
        for (std::size_t i = 1; ok && i < sorted.size(); ++i)
            if (sorted[i - 1].key == sorted[i].key)
                ok = sorted[i - 1].payload < sorted[i].payload;

        if (!ok) {
            result.passed = false;
            for (const Record& r : input)
                result.first_failing_keys.push_back(r.key);
            return result;
        }
    }
    return result;
}

}  // namespace twinsort
