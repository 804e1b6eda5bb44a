// Twin Sort: odd-even pair passes over adjacent elements with early
// termination once n-1 consecutive comparisons have required no swap.
//
// Even passes compare pairs (0,1),(2,3),...; odd passes (1,2),(3,4),...
// Parity alternates starting Even, for at most n passes; the pass cap alone
// guarantees sortedness, the false-run counter only ends the run sooner.
// The counter resets to 0 on every swap and persists across pass
// boundaries: n-1 consecutive swap-free comparisons over an unchanged
// array cover every adjacent pair, so firing implies the array is sorted.
//
// Sorting is in place; a swap happens only when the left element strictly
// exceeds the right, so equal keys never reorder (stable).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace twinsort {

enum class PassParity { Even, Odd };

constexpr PassParity parity_of_pass(std::uint64_t pass_index) {
    return pass_index % 2 == 0 ? PassParity::Even : PassParity::Odd;
}

// Counters for one sort run. false_run is the current length of the run of
// consecutive no-swap comparisons; termination fires when it reaches n-1.
struct SortStats {
    std::size_t n = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t passes = 0;  // passes started (a cut-short pass counts)
    bool terminated_early = false;
    std::uint64_t false_run = 0;
};

struct PassOutcome {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    bool terminated = false;
};

// Index pairs visited by one pass, in order. Even: (2j, 2j+1); odd:
// (2j+1, 2j+2); always floor(n/2) resp. floor((n-1)/2) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>>
pairs_for_pass(PassParity parity, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (n < 2) return pairs;
    for (std::size_t i = parity == PassParity::Even ? 0 : 1; i + 1 < n; i += 2)
        pairs.emplace_back(i, i + 1);
    return pairs;
}

// One compare-and-swap sweep over the pairs of the given parity.
// Requires stats.n == elems.size(). Mutates elems in place and accumulates
// into stats; stops mid-pass (terminated = true) as soon as false_run
// reaches n-1. Does not touch stats.passes.
template <class T, class Less>
PassOutcome run_pass(std::span<T> elems, PassParity parity, SortStats& stats,
                     Less less) {
    PassOutcome out;
    const std::size_t n = elems.size();
    if (n < 2) return out;
    for (std::size_t i = parity == PassParity::Even ? 0 : 1; i + 1 < n;
         i += 2) {
        ++stats.comparisons;
        ++out.comparisons;
        if (less(elems[i + 1], elems[i])) {  // left strictly exceeds right
            std::swap(elems[i], elems[i + 1]);
            ++stats.swaps;
            ++out.swaps;
            stats.false_run = 0;
        } else {
            ++stats.false_run;
        }
        if (stats.false_run == n - 1) {
            out.terminated = true;
            break;
        }
    }
    return out;
}

// Sorts elems in place (non-decreasing under less) and returns the run's
// counters. Comparisons never exceed (n-1)*n/2. Inputs of length < 2
// return immediately with zero passes.
template <class T, class Less = std::less<T>>
SortStats twin_sort(std::span<T> elems, Less less = {}) {
    SortStats stats;
    stats.n = elems.size();
    if (stats.n < 2) return stats;
    for (std::uint64_t pass = 0; pass < stats.n; ++pass) {
        ++stats.passes;
        if (run_pass(elems, parity_of_pass(pass), stats, less).terminated) {
            stats.terminated_early = true;
            break;
        }
    }
    return stats;
}

template <class T, class Less = std::less<T>>
SortStats twin_sort(std::vector<T>& elems, Less less = {}) {
    return twin_sort(std::span<T>(elems), less);
}

// Array state after one pass, for trace reproduction.
template <class T>
struct PassSnapshot {
    std::uint64_t pass_index = 0;
    PassParity parity = PassParity::Even;
    std::vector<T> elements;  // post-pass contents
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
};

template <class T>
struct PassTrace {
    std::vector<T> initial;
    std::vector<PassSnapshot<T>> snapshots;  // one per started pass
};

// As twin_sort, additionally recording the initial contents and one
// snapshot per started pass; snapshots.size() == stats.passes.
template <class T, class Less = std::less<T>>
SortStats twin_sort_traced(std::span<T> elems, PassTrace<T>& trace,
                           Less less = {}) {
    trace.initial.assign(elems.begin(), elems.end());
    trace.snapshots.clear();
    SortStats stats;
    stats.n = elems.size();
    if (stats.n < 2) return stats;
    for (std::uint64_t pass = 0; pass < stats.n; ++pass) {
        ++stats.passes;
        const PassParity parity = parity_of_pass(pass);
        const PassOutcome out = run_pass(elems, parity, stats, less);
        trace.snapshots.push_back({pass, parity,
                                   std::vector<T>(elems.begin(), elems.end()),
                                   out.comparisons, out.swaps});
        if (out.terminated) {
            stats.terminated_early = true;
            break;
        }
    }
    return stats;
}

template <class T, class Less = std::less<T>>
SortStats twin_sort_traced(std::vector<T>& elems, PassTrace<T>& trace,
                           Less less = {}) {
    return twin_sort_traced(std::span<T>(elems), trace, less);
}

}  // namespace twinsort
