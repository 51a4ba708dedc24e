#include "coheyt/downset.hpp"

namespace coheyt {

void require_same_parent(const downset& a, const downset& b) {
    if (a.parent.get() != b.parent.get())
        raise(errc::parent_mismatch, "downsets of different posets");
}

downset make_downset(poset_ptr p, mask_t bits) {
    if ((bits & ~p->full()) != 0) raise(errc::index_out_of_range, "bits outside poset");
    if (!p->is_downset(bits)) raise(errc::index_out_of_range, "set is not downward closed");
    return downset{std::move(p), bits};
}

downset bottom(poset_ptr p) { return downset{std::move(p), 0}; }

downset top(poset_ptr p) {
    mask_t full = p->full();
    return downset{std::move(p), full};
}

downset principal(poset_ptr p, unsigned i) {
    if (i >= p->size()) raise(errc::index_out_of_range, "point index " + std::to_string(i));
    mask_t d = p->down(i);
    return downset{std::move(p), d};
}

downset downward_closure(poset_ptr p, const std::vector<unsigned>& pts) {
    mask_t m = 0;
    for (unsigned i : pts) {
        if (i >= p->size()) raise(errc::index_out_of_range, "point index " + std::to_string(i));
        m |= p->down(i);
    }
    return downset{std::move(p), m};
}

downset join(const downset& a, const downset& b) {
    require_same_parent(a, b);
    return downset{a.parent, a.bits | b.bits};
}

downset meet(const downset& a, const downset& b) {
    require_same_parent(a, b);
    return downset{a.parent, a.bits & b.bits};
}

downset diff(const downset& a, const downset& b) {
    require_same_parent(a, b);
    return downset{a.parent, a.parent->closure(a.bits & ~b.bits)};
}

downset sym_diff(const downset& a, const downset& b) { return join(diff(a, b), diff(b, a)); }

downset top_minus(const downset& a) { return diff(top(a.parent), a); }

bool leq(const downset& a, const downset& b) {
    require_same_parent(a, b);
    return (a.bits & ~b.bits) == 0;
}

bool strictly_way_below(const downset& b, const downset& a) {
    require_same_parent(a, b);
    return (b.bits & ~a.bits) == 0 && diff(a, b).bits == a.bits;
}

bool canonical_less(const downset& a, const downset& b) {
    return mask_canonical_less(a.bits, b.bits);
}

std::string to_text(const downset& d) {
    std::string out = "{";
    bool first = true;
    mask_for_each(d.bits, [&](unsigned i) {
        if (!first) out += ",";
        out += d.parent->name(i);
        first = false;
    });
    out += "}";
    return out;
}

}
