// Instrumented classical sorts the harness measures twin sort against.
// Insertion and top-down merge are stable; quick (median-of-three, in-place
// Hoare partition) is not. Every key comparison is counted; "moves" are
// element moves for insertion, merge-buffer writes for merge, and
// exchanges for quick.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace twinsort {

struct BaselineCounts {
    std::uint64_t comparisons = 0;
    std::uint64_t moves = 0;
};

template <class T, class Less = std::less<T>>
BaselineCounts insertion_sort(std::span<T> a, Less less = {}) {
    BaselineCounts counts;
    for (std::size_t i = 1; i < a.size(); ++i) {
        T x = std::move(a[i]);
        std::size_t j = i;
        while (j > 0) {
            ++counts.comparisons;
            if (!less(x, a[j - 1])) break;
            a[j] = std::move(a[j - 1]);
            ++counts.moves;
            --j;
        }
        a[j] = std::move(x);
        if (j != i) ++counts.moves;  // placing back where it was is free
    }
    return counts;
}

namespace detail {

template <class T, class Less>
void merge_rec(std::span<T> a, std::span<T> buf, std::size_t lo,
               std::size_t hi, Less& less, BaselineCounts& counts) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_rec(a, buf, lo, mid, less, counts);
    merge_rec(a, buf, mid, hi, less, counts);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        ++counts.comparisons;
        // take from the right run only on strict order violation: stable
        if (less(a[j], a[i]))
            buf[k++] = std::move(a[j++]);
        else
            buf[k++] = std::move(a[i++]);
        ++counts.moves;
    }
    while (i < mid) {
        buf[k++] = std::move(a[i++]);
        ++counts.moves;
    }
    while (j < hi) {
        buf[k++] = std::move(a[j++]);
        ++counts.moves;
    }
    for (std::size_t m = lo; m < hi; ++m) a[m] = std::move(buf[m]);
}

template <class T, class Less>
void quick_rec(std::span<T> a, std::size_t lo, std::size_t hi, Less& less,
               BaselineCounts& counts) {
    while (lo < hi) {
        if (hi - lo == 1) {
            ++counts.comparisons;
            if (less(a[hi], a[lo])) {
                std::swap(a[lo], a[hi]);
                ++counts.moves;
            }
            return;
        }
        // median-of-three: order a[lo] <= a[mid] <= a[hi], pivot = a[mid]
        const std::size_t mid = lo + (hi - lo) / 2;
        ++counts.comparisons;
        if (less(a[mid], a[lo])) {
            std::swap(a[lo], a[mid]);
            ++counts.moves;
        }
        ++counts.comparisons;
        if (less(a[hi], a[mid])) {
            std::swap(a[mid], a[hi]);
            ++counts.moves;
            ++counts.comparisons;
            if (less(a[mid], a[lo])) {
                std::swap(a[lo], a[mid]);
                ++counts.moves;
            }
        }
        const T pivot = a[mid];
        // Hoare scan; a[lo] <= pivot <= a[hi] act as sentinels
        std::size_t i = lo, j = hi;
        while (true) {
            do {
                ++i;
                ++counts.comparisons;
            } while (less(a[i], pivot));
            do {
                --j;
                ++counts.comparisons;
            } while (less(pivot, a[j]));
            if (i >= j) break;
            std::swap(a[i], a[j]);
            ++counts.moves;
        }
        // recurse into the smaller side, iterate on the larger
        if (j - lo < hi - j) {
            quick_rec(a, lo, j, less, counts);
            lo = j + 1;
        } else {
            quick_rec(a, j + 1, hi, less, counts);
            hi = j;
        }
    }
}

}  // namespace detail

template <class T, class Less = std::less<T>>
BaselineCounts merge_sort(std::span<T> a, Less less = {}) {
    BaselineCounts counts;
    if (a.size() < 2) return counts;
    std::vector<T> buf(a.size());
    detail::merge_rec(a, std::span<T>(buf), 0, a.size(), less, counts);
    return counts;
}

template <class T, class Less = std::less<T>>
BaselineCounts quick_sort(std::span<T> a, Less less = {}) {
    BaselineCounts counts;
    if (a.size() < 2) return counts;
    detail::quick_rec(a, 0, a.size() - 1, less, counts);
    return counts;
}

}  // namespace twinsort
