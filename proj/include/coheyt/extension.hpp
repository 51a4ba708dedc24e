#pragma once

#include "coheyt/duality.hpp"

namespace coheyt {

// Classifier of a minimal proper extension of a finite algebra L0:
// g join irreducible in L0, H = {h1,h2}, and either r = 1 with h1 = h2 < g,
// or r = 2 with h1 v h2 the unique predecessor of g.
struct signature {
    downset g, h1, h2;   // h1 <= h2 in canonical order
    int r = 1;

    friend bool operator==(const signature& a, const signature& b) {
        return a.g == b.g && a.h1 == b.h1 && a.h2 == b.h2 && a.r == b.r;
    }
};

signature make_signature(downset g, downset ha, downset hb, int r);
std::string to_text(const signature& s);
bool signature_valid(const subalgebra& S, const signature& sig);

// all signatures over S, deterministically ordered
std::vector<signature> enumerate_signatures(const subalgebra& S);

// the signature of (x1,x2) when the tuple is primitive over S, else nothing
std::optional<signature> primitive_check(const subalgebra& S, const downset& x1,
                                         const downset& x2);

struct minimal_ext {
    algebra ext;
    embedding emb;        // S carrier into ext
    downset x1, x2;       // the generating primitive tuple
};

// the extension of S classified by sig: built on the dual poset of S with
// one point added (r = 1) or the g point split in two (r = 2)
minimal_ext minimal_extension(const subalgebra& S, const signature& sig,
                              bool verify_minimal = true);

// isomorphism L1 -> L2 fixing the aligned images of a common subalgebra
std::optional<embedding> iso_over(const algebra& L1, const std::vector<downset>& fix1,
                                  const algebra& L2, const std::vector<downset>& fix2);

struct primitive_tuple {
    downset x1, x2;
    signature sig;
};

// a primitive tuple over S inside L, chosen deterministically (S proper in L)
primitive_tuple find_primitive_tuple(const algebra& L, const subalgebra& S);

// tower S = S0 < S1 < ... < Sk = L; entry i holds (S_i, tuple over S_i)
std::vector<std::pair<subalgebra, primitive_tuple>> primitive_tower(const algebra& L,
                                                                    const subalgebra& S);

// true when some subalgebra lies strictly between the carrier and all of L
bool has_intermediate_subalgebra(const algebra& L, const subalgebra& S);

}
