#pragma once

#include <cstddef>
#include <vector>

#include "coheyt/downset.hpp"

namespace coheyt {

// The co-Heyting algebra of all downsets of a finite poset. The join
// irreducible elements are exactly the principal downsets, cached here in
// point order.
class algebra {
  public:
    explicit algebra(poset_ptr p);

    const poset_ptr& pos() const { return m_poset; }
    unsigned points() const { return m_poset->size(); }

    downset bot() const { return bottom(m_poset); }
    downset top() const { return coheyt::top(m_poset); }
    downset jir(unsigned i) const { return m_jir[i]; }
    const std::vector<downset>& jir() const { return m_jir; }

    // maximal join irreducibles below a; their join is a
    std::vector<downset> jir_components(const downset& a) const;

    // every element, in canonical order; throws cap_exceeded past the cap
    std::vector<downset> elements(std::size_t cap = 1 << 20) const;
    // number of elements, counting stops at cap+1
    std::size_t count_elements(std::size_t cap = 1 << 20) const;

    bool trivial() const { return m_poset->size() == 0; }

  private:
    poset_ptr m_poset;
    std::vector<downset> m_jir;
};

}
