#include <doctest.h>

#include "coheyt/variety.hpp"
#include "fixtures.hpp"

using namespace coheyt;
using namespace fixtures;

TEST_CASE("anchored memberships") {
    algebra l1 = L1(), l2 = L2(), l3 = L3(), b4 = B4(), l5 = L5(), l5s = L5s();

    CHECK(check_equational(l5, variety_tag::V4).member);
    CHECK(check_structural(l5, variety_tag::V4).member);

    variety_report r = check_equational(l5, variety_tag::V2);
    CHECK_FALSE(r.member);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->first == pt(l5, "x1"));   // first offender in canonical order

    CHECK(check_equational(l1, variety_tag::V8).member);
    CHECK_FALSE(check_equational(l2, variety_tag::V8).member);

    CHECK(check_equational(l3, variety_tag::V5).member);
    CHECK(check_equational(l5s, variety_tag::V6).member);
    CHECK_FALSE(check_equational(l5, variety_tag::V6).member);
    CHECK_FALSE(check_equational(l5, variety_tag::V2).member);

    CHECK(check_structural(b4, variety_tag::V2).member);
    CHECK(check_structural(l5, variety_tag::V3).member);
    CHECK(check_structural(l5s, variety_tag::V6).member);

    CHECK(check_equational(b4, variety_tag::V7).member);
    CHECK_FALSE(check_equational(l3, variety_tag::V7).member);
}

TEST_CASE("equational and structural checks agree up to five points") {
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n)) {
            algebra L(P);
            for (int k = 2; k <= 8; ++k) {
                variety_tag v = static_cast<variety_tag>(k);
                CHECK(check_equational(L, v).member == check_structural(L, v).member);
            }
            CHECK(check_equational(L, variety_tag::V1).member);
            CHECK(check_structural(L, variety_tag::V1).member);
        }
}

TEST_CASE("inclusions between the varieties") {
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n)) {
            algebra L(P);
            bool v2 = check_equational(L, variety_tag::V2).member;
            bool v3 = check_equational(L, variety_tag::V3).member;
            bool v4 = check_equational(L, variety_tag::V4).member;
            bool v5 = check_equational(L, variety_tag::V5).member;
            bool v7 = check_equational(L, variety_tag::V7).member;
            bool v8 = check_equational(L, variety_tag::V8).member;
            if (v8) CHECK(v7);
            if (v7) CHECK(v5);
            CHECK(v5 == (v2 && v3));
            if (v4) CHECK(v3);
        }
}

TEST_CASE("dimension") {
    CHECK(dimension(L1()) == -1);
    CHECK(dimension(L2()) == 0);
    CHECK(dimension(B4()) == 0);
    CHECK(dimension(L5()) == 1);
    CHECK(dimension(chain(3)) == 2);

    // dimension <= 1 is V3, dimension <= 0 is boolean
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n)) {
            algebra L(P);
            CHECK((dimension(L) <= 1) == check_structural(L, variety_tag::V3).member);
            CHECK((dimension(L) <= 0) == check_structural(L, variety_tag::V7).member);
        }
}

TEST_CASE("component factorization") {
    algebra l5 = L5();
    auto one = component_factorization(l5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].count_elements() == 5);

    algebra b4 = B4();
    auto two = component_factorization(b4);
    REQUIRE(two.size() == 2);
    CHECK(two[0].count_elements() == 2);
    CHECK(two[1].count_elements() == 2);

    algebra mix(build_poset({"p", "q", "r"}, {{"p", "q"}}));
    auto fac = component_factorization(mix);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].count_elements() == 3);
    CHECK(fac[1].count_elements() == 2);

    // the element counts multiply back and membership is component-wise
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n)) {
            algebra L(P);
            std::size_t prod = 1;
            for (const auto& F : component_factorization(L)) prod *= F.count_elements();
            CHECK(prod == L.count_elements());
            for (int k = 2; k <= 7; ++k) {
                variety_tag v = static_cast<variety_tag>(k);
                bool whole = check_equational(L, v).member;
                bool each = true;
                for (const auto& F : component_factorization(L))
                    each = each && check_equational(F, v).member;
                CHECK(whole == each);
            }
        }
}

TEST_CASE("chain product embedding") {
    // a chain embeds into itself, with one factor
    algebra c5 = chain(4);
    auto e = chain_product_embedding(c5, 1, 5);
    REQUIRE(e.has_value());
    CHECK(e->dst().count_elements() == 5);

    // the lambda poset needs two chains of three elements each
    algebra l5s = L5s();
    auto e2 = chain_product_embedding(l5s, 2, 3);
    REQUIRE(e2.has_value());
    CHECK(e2->dst().count_elements() == 9);
    CHECK(check_embedding(*e2).ok);
    // the spec's image table: a -> (1,0), b -> (0,1), a v b -> (1,1), 1 -> (2,2)
    CHECK(mask_popcount(e2->apply(pt(l5s, "a")).bits) == 1);
    CHECK(mask_popcount(e2->apply(join(pt(l5s, "a"), pt(l5s, "b"))).bits) == 2);
    CHECK(e2->apply(l5s.top()).is_full());

    // L5 admits no such embedding at any bounds (it is not in V6)
    algebra l5 = L5();
    CHECK_FALSE(chain_product_embedding(l5, 4, 4).has_value());
    CHECK_FALSE(chain_product_embedding(l5, 3, 4).has_value());

    // bounds are honored
    CHECK_FALSE(chain_product_embedding(l5s, 1, 3).has_value());
    CHECK_FALSE(chain_product_embedding(l5s, 2, 2).has_value());
}
