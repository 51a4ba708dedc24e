#pragma once

#include <functional>

#include "coheyt/extension.hpp"
#include "coheyt/variety.hpp"

namespace coheyt {

// one scanned hypothesis instance: the input tuple and the witnesses found
// inside the algebra, or nothing when the axiom fails there
struct axiom_instance {
    std::vector<downset> input;
    std::optional<std::vector<downset>> witness;
};

struct axiom_report {
    char kind = 'D';    // 'D' or 'S'
    int variant = 1;    // 1..6
    bool holds = true;
    std::vector<axiom_instance> instances;

    const axiom_instance* first_failure() const {
        for (const auto& it : instances)
            if (!it.witness) return &it;
        return nullptr;
    }
};

// exhaustive checks of the axioms inside a finite algebra
// (D2 = D1, D4 = D5 = D3; S3 = S1, S5 = S2)
axiom_report check_density(const algebra& L, int variant, scan_mode mode = scan_mode::auto_pick);
axiom_report check_splitting(const algebra& L, int variant, scan_mode mode = scan_mode::auto_pick);

// hypothesis predicates shared by the checkers and the extension builders
bool density_hypothesis(const algebra& L, int variant, const downset& a, const downset& c,
                        std::string* why = nullptr);
bool splitting_hypothesis(const algebra& L, int variant, const downset& a, const downset& b1,
                          const downset& b2, std::string* why = nullptr);
bool splitting_witness_ok(const downset& a, const downset& b1, const downset& b2,
                          const downset& a1, const downset& a2);

// A poset-with-projection plan feeding lifted_embedding; marks name the
// designated witness point sets of the construction.
struct extension_plan {
    poset_ptr index;
    std::vector<unsigned> pi;
    std::vector<std::pair<std::string, mask_t>> marks;

    mask_t mark(const std::string& name) const;
};

// new join irreducible below each component of a (lemma construction for D1)
extension_plan d1_plan(const algebra& L, const downset& a);
// the xi-plan splitting along b1, b2 (lemma construction for S1)
extension_plan s1_plan(const algebra& L, const downset& b1, const downset& b2);

struct density_result {
    algebra ext;
    embedding emb;
    downset b;
};

struct splitting_result {
    algebra ext;
    embedding emb;
    downset a1, a2;
};

// witness extensions per variety; inputs must satisfy the variant hypotheses
// and L must lie in the variant's variety
density_result density_extension(const algebra& L, const downset& a, const downset& c,
                                 int variant);
splitting_result splitting_extension(const algebra& L, const downset& a, const downset& b1,
                                     const downset& b2, int variant);

// componentwise recombination of per-factor witness extensions
struct factor_witness {
    algebra ext;
    embedding emb;
    std::vector<downset> witnesses;
};
factor_witness product_lift_witness(const algebra& L, const std::vector<algebra>& factors,
                                    const std::vector<factor_witness>& per_factor);

// exhaustive oracle: smallest poset extension of L (up to max_new_points new
// points) whose downset algebra admits an embedding of L satisfying the
// predicate, scanning candidates in canonical order
using search_predicate =
    std::function<std::optional<std::vector<downset>>(const algebra& ext, const embedding& phi)>;
struct search_result {
    algebra ext;
    embedding emb;
    std::vector<downset> witnesses;
};
std::optional<search_result> bounded_extension_search(const algebra& L,
                                                      const search_predicate& pred,
                                                      unsigned max_new_points,
                                                      std::optional<variety_tag> constraint);

// enumeration backend of the search: visits embeddings of L into candidate
// algebras in canonical order until the visitor returns true
bool for_each_extension(const algebra& L, unsigned max_new_points,
                        std::optional<variety_tag> constraint,
                        const std::function<bool(const algebra&, const embedding&)>& visit);

}
