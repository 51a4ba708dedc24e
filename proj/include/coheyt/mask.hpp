#pragma once

#include <cstdint>
#include <vector>

namespace coheyt {

// Element sets of a poset are kept as fixed-width bit masks. The default
// poset cap is 64 elements; the representation leaves headroom up to 128
// so that internally grown posets (witness constructions) do not overflow.
using mask_t = unsigned __int128;

constexpr unsigned max_poset_width = 128;

inline mask_t mask_bit(unsigned i) { return mask_t(1) << i; }

inline bool mask_test(mask_t m, unsigned i) { return (m >> i) & 1; }

inline unsigned mask_popcount(mask_t m) {
    return static_cast<unsigned>(__builtin_popcountll(static_cast<std::uint64_t>(m)) +
                                 __builtin_popcountll(static_cast<std::uint64_t>(m >> 64)));
}

// index of the lowest set bit, -1 when empty
inline int mask_lowest(mask_t m) {
    if (m == 0) return -1;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
}

template <typename F>
void mask_for_each(mask_t m, F&& f) {
    while (m != 0) {
        int i = mask_lowest(m);
        f(static_cast<unsigned>(i));
        m &= m - 1;
    }
}

inline std::vector<unsigned> mask_indices(mask_t m) {
    std::vector<unsigned> out;
    mask_for_each(m, [&](unsigned i) { out.push_back(i); });
    return out;
}

// total order used everywhere a deterministic element ordering is needed:
// first by cardinality, then by the member index sequence lexicographically
inline bool mask_canonical_less(mask_t a, mask_t b) {
    unsigned ca = mask_popcount(a), cb = mask_popcount(b);
    if (ca != cb) return ca < cb;
    while (a != 0 && b != 0) {
        int ia = mask_lowest(a), ib = mask_lowest(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

}
