#pragma once

#include "coheyt/algebra.hpp"
#include "coheyt/enumeration.hpp"

namespace fixtures {

using namespace coheyt;

// the basic algebras of the development, as downset algebras:
//   L2  - one point u                        (two elements)
//   L3  - two point chain p < q              (three element chain)
//   B4  - two point antichain {p, q}         (four element boolean algebra)
//   L5  - the V poset c < x1, c < x2         (five elements, unique atom)
//   L5s - the lambda poset a < t, b < t      (five elements, two atoms)
inline algebra L2() { return algebra(build_poset({"u"}, {})); }
inline algebra L3() { return algebra(build_poset({"p", "q"}, {{"p", "q"}})); }
inline algebra B4() { return algebra(build_poset({"p", "q"}, {})); }
inline algebra L5() {
    return algebra(build_poset({"c", "x1", "x2"}, {{"c", "x1"}, {"c", "x2"}}));
}
inline algebra L5s() {
    return algebra(build_poset({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}}));
}
inline algebra L1() { return algebra(build_poset({}, {})); }
inline algebra chain(unsigned pts) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned i = 0; i < pts; ++i) names.push_back("c" + std::to_string(i));
    for (unsigned i = 0; i + 1 < pts; ++i) covers.emplace_back(names[i], names[i + 1]);
    return algebra(build_poset(names, covers));
}

inline downset pt(const algebra& L, const std::string& name) {
    int i = L.pos()->index_of(name);
    if (i < 0) throw std::runtime_error("no point " + name);
    return principal(L.pos(), static_cast<unsigned>(i));
}

// independent oracle for the difference: the least downset c with a <= b v c,
// found by scanning every element
inline downset diff_oracle(const algebra& L, const downset& a, const downset& b) {
    std::optional<downset> best;
    for (const auto& c : L.elements()) {
        if (!leq(a, join(b, c))) continue;
        if (!best || leq(c, *best)) best = c;
    }
    // the minimum exists because the candidate set is closed under meets
    for (const auto& c : L.elements())
        if (leq(a, join(b, c)) && !leq(*best, c)) throw std::runtime_error("diff oracle: no minimum");
    return *best;
}

// independent downset generator: filter all point subsets by the definition
inline std::vector<downset> all_downsets_oracle(const algebra& L) {
    std::vector<downset> out;
    unsigned n = L.points();
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        mask_t m = static_cast<mask_t>(bits);
        bool closed = true;
        for (unsigned i = 0; i < n && closed; ++i) {
            if (!mask_test(m, i)) continue;
            for (unsigned j = 0; j < n && closed; ++j)
                if (L.pos()->leq(j, i) && !mask_test(m, j)) closed = false;
        }
        if (closed) out.push_back(downset{L.pos(), m});
    }
    return out;
}

}
