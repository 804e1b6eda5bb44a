#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace twinsort {

// Ground-truth stable sort for verification: plain insertion sort, written
// for obviousness, sharing nothing with the twin-sort pass machinery.
// Elements shift right only while strictly greater than the one being
// inserted, so equal keys keep their input order.
template <class T, class Less = std::less<T>>
std::vector<T> reference_sort(std::vector<T> elems, Less less = {}) {
    for (std::size_t i = 1; i < elems.size(); ++i) {
        T x = std::move(elems[i]);
        std::size_t j = i;
        while (j > 0 && less(x, elems[j - 1])) {
            elems[j] = std::move(elems[j - 1]);
            --j;
        }
        elems[j] = std::move(x);
    }
    return elems;
}

}  // namespace twinsort
