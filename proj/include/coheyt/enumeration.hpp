#pragma once

#include <compare>
#include <cstdint>

#include "coheyt/subalgebra.hpp"

namespace coheyt {

// relabeling-invariant encoding of a poset; equal iff order isomorphic
struct canonical_form {
    unsigned n = 0;
    std::vector<std::uint64_t> code;   // one strict-order row per point

    friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
};

canonical_form canonical_form_of(const poset& p);

unsigned enumerate_posets_cap();
void set_enumerate_posets_cap(unsigned cap);

// one representative per isomorphism class, in canonical-code order;
// points are named p0, p1, ...
std::vector<poset_ptr> enumerate_posets(unsigned n);

// all operation-closed subsets containing {0,1}, canonical order
std::vector<subalgebra> enumerate_subalgebras(const algebra& L, std::size_t element_cap = 64);

}
