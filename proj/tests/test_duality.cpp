#include <doctest.h>

#include "coheyt/json_io.hpp"
#include "fixtures.hpp"

using namespace coheyt;
using namespace fixtures;

namespace {

// the order table of the downset algebra of a poset
lattice_table table_of(const algebra& L) {
    auto elems = L.elements();
    lattice_table t;
    t.size = static_cast<unsigned>(elems.size());
    t.leq.assign(t.size, std::vector<bool>(t.size, false));
    for (unsigned i = 0; i < t.size; ++i)
        for (unsigned j = 0; j < t.size; ++j) t.leq[i][j] = leq(elems[i], elems[j]);
    return t;
}

lattice_table chain_table(unsigned n) {
    lattice_table t;
    t.size = n;
    t.leq.assign(n, std::vector<bool>(n, false));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) t.leq[i][j] = true;
    return t;
}

}

TEST_CASE("algebra_from_table on basic tables") {
    // three element chain: two join irreducibles forming a two point chain
    table_dual d = algebra_from_table(chain_table(3));
    CHECK(d.pos->size() == 2);
    CHECK(d.pos->leq(0, 1) != d.pos->leq(1, 0));   // a two point chain, one way

    // the four element boolean algebra: 0, a, b, 1 with a, b incomparable
    lattice_table b4;
    b4.size = 4;
    b4.leq = {{true, true, true, true},
              {false, true, false, true},
              {false, false, true, true},
              {false, false, false, true}};
    table_dual db = algebra_from_table(b4);
    CHECK(db.pos->size() == 2);
    CHECK_FALSE(db.pos->leq(0, 1));
    CHECK_FALSE(db.pos->leq(1, 0));

    // M3 is a lattice but not distributive
    lattice_table m3;
    m3.size = 5;   // 0, a, b, c, 1
    m3.leq.assign(5, std::vector<bool>(5, false));
    for (unsigned i = 0; i < 5; ++i) m3.leq[i][i] = true;
    for (unsigned i = 0; i < 5; ++i) {
        m3.leq[0][i] = true;
        m3.leq[i][4] = true;
    }
    try {
        (void)algebra_from_table(m3);
        FAIL("M3 accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_distributive);
    }

    // a bounded non-lattice: two middle elements with no least upper bound
    lattice_table nl;
    nl.size = 6;   // 0, a, b, c, d, 1 with a,b < c,d < 1
    nl.leq.assign(6, std::vector<bool>(6, false));
    for (unsigned i = 0; i < 6; ++i) {
        nl.leq[i][i] = true;
        nl.leq[0][i] = true;
        nl.leq[i][5] = true;
    }
    for (unsigned a : {1u, 2u})
        for (unsigned c : {3u, 4u}) nl.leq[a][c] = true;
    try {
        (void)algebra_from_table(nl);
        FAIL("non-lattice accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_lattice);
    }

    // unbounded: two maximal elements over a shared bottom
    lattice_table nb;
    nb.size = 3;
    nb.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
    try {
        (void)algebra_from_table(nb);
        FAIL("unbounded table accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_bounded);
    }

    // cap: tables above the default 24 are rejected unless the cap is raised
    CHECK_THROWS_AS((void)algebra_from_table(chain_table(25)), error);
    CHECK_NOTHROW((void)algebra_from_table(chain_table(25), 32));
}

TEST_CASE("duality roundtrip up to five points") {
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n)) {
            algebra L(P);
            table_dual d = algebra_from_table(table_of(L), 64);
            // the dual poset is order isomorphic to P
            auto iso = iso_over(algebra(d.pos), {}, L, {});
            CHECK(iso.has_value());
            // iota is an isomorphism: bijective and operation preserving
            auto elems = L.elements();
            for (std::size_t i = 0; i < elems.size(); ++i)
                for (std::size_t j = 0; j < elems.size(); ++j) {
                    CHECK((d.iso[i] == d.iso[j]) == (i == j));
                    CHECK(leq(elems[i], elems[j]) == leq(d.iso[i], d.iso[j]));
                }
        }
}

TEST_CASE("lifted embedding") {
    algebra l3 = L3();

    SUBCASE("identity projection gives the identity embedding") {
        embedding e = lifted_embedding(l3, l3.pos(), {0, 1});
        CHECK(check_embedding(e).ok);
        for (const auto& a : l3.elements()) CHECK(e.apply(a).bits == a.bits);
    }

    SUBCASE("doubling the top point of the 2-chain embeds L3 into the 4-chain") {
        // I = p < alpha < q, pi(alpha) = q
        poset_ptr I = build_poset({"p", "alpha", "q"}, {{"p", "alpha"}, {"alpha", "q"}});
        embedding e = lifted_embedding(l3, I, {0, 1, 1});
        CHECK(check_embedding(e).ok);
        CHECK(e.dst().count_elements() == 4);
        CHECK(to_text(e.apply(l3.top())) == "{p,alpha,q}");
        CHECK(to_text(e.apply(pt(l3, "p"))) == "{p}");
    }

    SUBCASE("pi must be surjective") {
        poset_ptr I = build_poset({"p"}, {});
        try {
            (void)lifted_embedding(l3, I, {0});
            FAIL("not surjective");
        } catch (const error& e) {
            CHECK(e.code() == errc::not_surjective);
        }
    }

    SUBCASE("pi must be increasing") {
        poset_ptr I = build_poset({"a", "b"}, {{"a", "b"}});
        try {
            (void)lifted_embedding(l3, I, {1, 0});
            FAIL("not increasing");
        } catch (const error& e) {
            CHECK(e.code() == errc::not_increasing);
        }
    }

    SUBCASE("lifting failure is reported") {
        // I = two incomparable points over the 2-chain: p-copy cannot lift to q
        poset_ptr I = build_poset({"p", "q"}, {});
        try {
            (void)lifted_embedding(l3, I, {0, 1});
            FAIL("lifting should fail");
        } catch (const error& e) {
            CHECK(e.code() == errc::lifting_fails);
        }
    }
}

TEST_CASE("check_embedding catches broken maps") {
    algebra l3 = L3();
    CHECK(check_embedding(embedding::identity(l3)).ok);

    // collapsing map: both points sent to the top
    embedding collapse = embedding::full(l3, l3, {l3.top(), l3.top()}, "bad");
    check_result r = check_embedding(collapse);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("injective") != std::string::npos);

    // constant-to-1 on the carrier: 0 is not preserved
    embedding to_one = embedding::on_carrier(l3, l3, {l3.bot(), l3.top()},
                                             {l3.top(), l3.top()}, "bad");
    check_result r2 = check_embedding(to_one);
    CHECK_FALSE(r2.ok);
    CHECK(r2.violation.find("0") != std::string::npos);
}

TEST_CASE("lifted embeddings always verify (generated cases)") {
    // collapse a doubled antichain onto B4's poset
    algebra b4 = B4();
    poset_ptr I = build_poset({"p1", "p2", "q1"}, {});
    embedding e = lifted_embedding(b4, I, {0, 0, 1});
    CHECK(check_embedding(e).ok);

    algebra l5 = L5();
    poset_ptr J = build_poset({"c", "x1a", "x1b", "x2"},
                              {{"c", "x1a"}, {"c", "x1b"}, {"c", "x2"}});
    embedding e2 = lifted_embedding(l5, J, {0, 1, 1, 2});
    CHECK(check_embedding(e2).ok);
}

TEST_CASE("table json") {
    json j = {{"size", 3},
              {"leq", {{true, true, true}, {false, true, true}, {false, false, true}}}};
    lattice_table t = table_from_json(j);
    CHECK(t.size == 3);
    CHECK(algebra_from_table(t).pos->size() == 2);
}
