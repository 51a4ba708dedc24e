#pragma once

#include <string>
#include <vector>

#include "coheyt/poset.hpp"

namespace coheyt {

// A decreasing subset of a poset: one element of the downset algebra.
// Downsets are only combinable when they share the identical parent object.
struct downset {
    poset_ptr parent;
    mask_t bits = 0;

    bool is_empty() const { return bits == 0; }
    bool is_full() const { return parent && bits == parent->full(); }

    friend bool operator==(const downset& a, const downset& b) {
        return a.parent.get() == b.parent.get() && a.bits == b.bits;
    }
    friend bool operator!=(const downset& a, const downset& b) { return !(a == b); }
};

void require_same_parent(const downset& a, const downset& b);

downset make_downset(poset_ptr p, mask_t bits);   // validates downward closure
downset bottom(poset_ptr p);
downset top(poset_ptr p);
downset principal(poset_ptr p, unsigned i);

// smallest downset containing the given points
downset downward_closure(poset_ptr p, const std::vector<unsigned>& pts);

downset join(const downset& a, const downset& b);
downset meet(const downset& a, const downset& b);

// a - b = min{ c / a <= b v c } = (a \ b) downward closed
downset diff(const downset& a, const downset& b);
downset sym_diff(const downset& a, const downset& b);
downset top_minus(const downset& a);

bool leq(const downset& a, const downset& b);
// b << a  iff  a - b = a and b <= a
bool strictly_way_below(const downset& b, const downset& a);

bool canonical_less(const downset& a, const downset& b);

// canonical text: sorted member names in braces, e.g. {c,x2}
std::string to_text(const downset& d);

// mask-level kernels for the exhaustive scans: same operations, no handles
inline mask_t diff_mask(const poset& E, mask_t a, mask_t b) { return E.closure(a & ~b); }
inline mask_t top_minus_mask(const poset& E, mask_t a) { return E.closure(E.full() & ~a); }
inline bool way_below_mask(const poset& E, mask_t b, mask_t a) {
    return (b & ~a) == 0 && diff_mask(E, a, b) == a;
}

}
