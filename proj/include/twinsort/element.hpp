#pragma once

#include <compare>

namespace twinsort {

// Sortable record: ordering consults only the key; the payload rides along
// untouched, which is what the stability checks observe.
template <class Key, class Payload>
struct Keyed {
    Key key{};
    Payload payload{};

    friend bool operator==(const Keyed&, const Keyed&) = default;
};

struct KeyLess {
    template <class Key, class Payload>
    bool operator()(const Keyed<Key, Payload>& a,
                    const Keyed<Key, Payload>& b) const {
        return a.key < b.key;
    }
};

}  // namespace twinsort
