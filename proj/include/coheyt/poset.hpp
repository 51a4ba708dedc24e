#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coheyt/errors.hpp"
#include "coheyt/mask.hpp"

namespace coheyt {

// global size cap for posets built through the public constructors;
// COHEYT_MAX_POSET overrides it in the CLI (hard ceiling: max_poset_width)
unsigned poset_size_cap();
void set_poset_size_cap(unsigned cap);

// A finite poset over named points. The order is stored reflexively and
// transitively closed, as one down-mask and one up-mask per point.
class poset {
  public:
    poset(std::vector<std::string> names, std::vector<mask_t> down);

    unsigned size() const { return static_cast<unsigned>(m_names.size()); }
    const std::string& name(unsigned i) const { return m_names[i]; }
    const std::vector<std::string>& names() const { return m_names; }
    int index_of(const std::string& name) const;

    bool leq(unsigned i, unsigned j) const { return mask_test(m_down[j], i); }
    mask_t down(unsigned i) const { return m_down[i]; }
    mask_t up(unsigned i) const { return m_up[i]; }
    mask_t full() const { return m_full; }

    mask_t closure(mask_t s) const;            // downward closure
    bool is_downset(mask_t s) const;
    mask_t maximal_of(mask_t s) const;         // maximal points within s
    mask_t minimal_of(mask_t s) const;
    bool point_maximal(unsigned i) const { return (m_up[i] & ~mask_bit(i)) == 0; }
    bool point_minimal(unsigned i) const { return (m_down[i] & ~mask_bit(i)) == 0; }

    // cover pairs (i, j) with i covered by j, in point order
    std::vector<std::pair<unsigned, unsigned>> covers() const;

    // length (point count) of the longest chain; 0 for the empty poset
    unsigned longest_chain() const;

    // connected components of the comparability graph, each a point mask,
    // ordered by lowest point
    std::vector<mask_t> components() const;

  private:
    std::vector<std::string> m_names;
    std::vector<mask_t> m_down;
    std::vector<mask_t> m_up;
    mask_t m_full = 0;
};

using poset_ptr = std::shared_ptr<const poset>;

// builds the reflexive-transitive closure of a cover (or any) relation;
// rejects duplicate/unknown names and cycles
poset_ptr build_poset(const std::vector<std::string>& names,
                      const std::vector<std::pair<std::string, std::string>>& covers,
                      unsigned cap = poset_size_cap());

// same, from an index relation given as "below" adjacency masks (need not be closed)
poset_ptr build_poset_from_relation(std::vector<std::string> names, std::vector<mask_t> below,
                                    unsigned cap = poset_size_cap());

// induced subposet on the points of `pts`, keeping names and point order
poset_ptr induced_subposet(const poset& p, mask_t pts);

// disjoint union; duplicate names across parts get a "@k" suffix
poset_ptr disjoint_union(const std::vector<poset_ptr>& parts);

}
