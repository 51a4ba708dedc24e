#pragma once

#include <optional>

#include "coheyt/algebra.hpp"

namespace coheyt {

// A finite operation-closed subset of an algebra (the role of L0). The
// carrier is kept sorted canonically; join irreducibility, a^- and g(x,L0)
// are computed within the carrier's own order, never inherited from the
// parent.
class subalgebra {
  public:
    subalgebra(algebra parent, std::vector<downset> carrier);

    const algebra& parent() const { return m_parent; }
    const std::vector<downset>& carrier() const { return m_carrier; }
    std::size_t size() const { return m_carrier.size(); }

    bool contains(const downset& d) const { return index_of(d) >= 0; }
    int index_of(const downset& d) const;

    // join irreducibles within the carrier order, canonical order
    std::vector<downset> jir() const;
    // maximal carrier join-irreducibles below a (a in carrier)
    std::vector<downset> jir_components(const downset& a) const;

    // a^- : join of all carrier elements strictly below a
    downset predecessor_join(const downset& a) const;
    // g(x, L0) : meet of all carrier elements above x (x in parent)
    downset min_cover(const downset& x) const;

    bool is_proper() const;   // carrier smaller than the whole parent algebra

  private:
    algebra m_parent;
    std::vector<downset> m_carrier;
};

subalgebra generated_subalgebra(const algebra& L, std::vector<downset> gens);
subalgebra full_subalgebra(const algebra& L);

struct closure_report {
    bool ok = true;
    std::string violation;   // e.g. "(x,y,-)" description of the first failure
};
closure_report is_subalgebra(const algebra& L, const std::vector<downset>& carrier);

// Birkhoff dual of the carrier: the poset of its join irreducibles, with the
// iota map s -> { t in I(S) / t <= s } realized as downsets of that poset.
// Points are named after the maximal points of the corresponding downset.
struct dualization {
    poset_ptr pos;                      // poset of I(S)
    std::vector<downset> jirs;          // carrier join irreducibles, aligned with pos points
    algebra dual;                       // downset algebra of pos
    downset iota(const subalgebra& S, const downset& s) const;
};
dualization dualize(const subalgebra& S);

}
