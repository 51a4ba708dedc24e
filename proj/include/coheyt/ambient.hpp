#pragma once

#include <map>

#include "coheyt/witness.hpp"

namespace coheyt {

// A self-extending algebra in one of the varieties V1..V6: whenever a
// density or splitting witness is requested, the current algebra grows just
// enough to contain it, staying in the variety. Every growth step is
// recorded and tracked elements are remapped through each step.
class ambient {
  public:
    ambient(subalgebra seed, variety_tag v);

    variety_tag variety() const { return m_variety; }
    const algebra& current() const { return m_current; }
    const std::vector<std::pair<std::string, embedding>>& history() const { return m_history; }

    void track(const std::string& name, const downset& d);
    const downset& tracked(const std::string& name) const;
    const std::map<std::string, downset>& tracked() const { return m_tracked; }

    // witness growth; inputs live in current(), results live in the new
    // current(); tracked elements are remapped automatically
    downset density(const downset& a, const downset& c);
    std::pair<downset, downset> splitting(const downset& a, const downset& b1, const downset& b2);

    // the embedding recorded by the most recent growth step
    const embedding& last_step() const;

  private:
    void grow(const std::string& tag, const algebra& ext, embedding emb);

    variety_tag m_variety;
    algebra m_current;
    std::map<std::string, downset> m_tracked;
    std::vector<std::pair<std::string, embedding>> m_history;
};

ambient ambient_new(const subalgebra& S, variety_tag v);

// Realizes sigma as the signature of a primitive tuple over the carrier
// image inside the ambient, growing it as needed. carrier and sig are given
// in current() coordinates and come back remapped to the final current().
std::pair<downset, downset> realize_signature(ambient& A, std::vector<downset>& carrier,
                                              signature& sig);

// Embedding of L1 into the grown ambient fixing the common subalgebra
// pointwise: s_images[i] is the ambient image of S.carrier()[i].
embedding embed_over(ambient& A, std::vector<downset> s_images, const subalgebra& S,
                     const algebra& L1);

// Corollary construction: embed any finite algebra of the variety over the
// two-element common subalgebra into a fresh ambient (returned alongside).
struct finite_embedding {
    ambient grown;
    embedding emb;
};
finite_embedding embed_finite(const algebra& L1, variety_tag v);

}
