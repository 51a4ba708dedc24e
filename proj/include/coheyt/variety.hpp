#pragma once

#include <optional>

#include "coheyt/duality.hpp"
#include "coheyt/scan.hpp"

namespace coheyt {

enum class variety_tag { V1 = 1, V2, V3, V4, V5, V6, V7, V8 };

const char* variety_name(variety_tag v);
std::optional<variety_tag> variety_from_name(const std::string& s);

struct variety_report {
    bool member = true;
    // first offending pair in canonical order, when membership fails
    std::optional<std::pair<downset, downset>> counterexample;
    std::string detail;
};

variety_report check_equational(const algebra& L, variety_tag v,
                                scan_mode mode = scan_mode::auto_pick);
variety_report check_structural(const algebra& L, variety_tag v);

// fast membership: structural criterion, backed by the equational check on
// small algebras (both are exercised against each other by the test suite)
bool variety_holds(const algebra& L, variety_tag v);

// longest chain of the dual poset minus one; -1 for the one-point algebra
int dimension(const algebra& L);

// downset algebras of the poset's connected components; their product is L
std::vector<algebra> component_factorization(const algebra& L);

// embedding into a product of at most max_factors chain algebras, each with
// at most max_height elements, when one exists within the bounds
std::optional<embedding> chain_product_embedding(const algebra& L, unsigned max_factors,
                                                 unsigned max_height);

}
