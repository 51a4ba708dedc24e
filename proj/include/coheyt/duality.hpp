#pragma once

#include <functional>
#include <optional>
#include <string>

#include "coheyt/subalgebra.hpp"

namespace coheyt {

// A finite bounded distributive lattice given by its order table.
struct lattice_table {
    unsigned size = 0;
    std::vector<std::vector<bool>> leq;
};

// An injective operation-preserving map between downset algebras. Two
// storage forms share one interface: full-algebra sources keep only the
// images of the join irreducibles (the map extends by joins), carrier
// sources list every element with its image.
class embedding {
  public:
    static embedding full(algebra src, algebra dst, std::vector<downset> jir_images,
                          std::string provenance);
    static embedding on_carrier(algebra src, algebra dst, std::vector<downset> elems,
                                std::vector<downset> images, std::string provenance);
    static embedding identity(const algebra& L);

    const algebra& src() const { return m_src; }
    const algebra& dst() const { return m_dst; }
    bool is_full() const { return m_full; }
    const std::string& provenance() const { return m_provenance; }
    const std::vector<downset>& jir_images() const { return m_jir_images; }
    const std::vector<downset>& carrier() const { return m_elems; }
    const std::vector<downset>& images() const { return m_images; }

    downset apply(const downset& d) const;

    // source elements the map is defined on (all of them for full sources)
    std::vector<downset> domain(std::size_t cap = 1 << 16) const;

  private:
    embedding(algebra src, algebra dst) : m_src(std::move(src)), m_dst(std::move(dst)) {}
    algebra m_src, m_dst;
    bool m_full = false;
    std::vector<downset> m_jir_images;
    std::vector<downset> m_elems, m_images;
    std::string m_provenance;
};

embedding compose(const embedding& first, const embedding& second);

struct check_result {
    bool ok = true;
    std::string violation;
};

// exhaustive verification: injective, preserves 0, 1, join, meet, diff
check_result check_embedding(const embedding& e, std::size_t max_elements = 1 << 16);

// Birkhoff dual of a lattice table: the poset of its join irreducibles and
// the isomorphism iota : a -> a-down intersected with the irreducibles.
struct table_dual {
    poset_ptr pos;
    std::vector<downset> iso;   // indexed by table element
};
table_dual algebra_from_table(const lattice_table& t, unsigned cap = 24);

// The unique embedding of L into the downsets of I induced by an increasing
// surjection pi : I -> points of L with the lifting property.
embedding lifted_embedding(const algebra& L, poset_ptr I, const std::vector<unsigned>& pi,
                           std::string provenance = "lifted");

}
