#include <doctest.h>

#include "fixtures.hpp"

using namespace coheyt;
using namespace fixtures;

TEST_CASE("generated subalgebra") {
    algebra l5 = L5(), l3 = L3();
    subalgebra constants = generated_subalgebra(l5, {});
    CHECK(constants.size() == 2);

    // x1-down regenerates all of L5: 1 - x1 = x2, x1 ^ x2 = c
    subalgebra all = generated_subalgebra(l5, {pt(l5, "x1")});
    CHECK(all.size() == 5);

    subalgebra l3all = generated_subalgebra(l3, {pt(l3, "p")});
    CHECK(l3all.size() == 3);

    // idempotent and monotone in the generators
    subalgebra again = generated_subalgebra(l5, all.carrier());
    CHECK(again.carrier() == all.carrier());
    subalgebra less = generated_subalgebra(l5, {pt(l5, "c")});
    CHECK(less.size() <= all.size());
    for (const auto& d : less.carrier()) CHECK(all.contains(d));
}

TEST_CASE("predecessor join") {
    algebra l3 = L3(), b4 = B4();
    subalgebra s3 = full_subalgebra(l3);
    CHECK(s3.predecessor_join(l3.bot()) == l3.bot());
    CHECK(s3.predecessor_join(l3.top()) == pt(l3, "p"));

    // in B4 the top is join reducible: its predecessor join is itself
    subalgebra s4 = full_subalgebra(b4);
    CHECK(s4.predecessor_join(b4.top()) == b4.top());

    CHECK_THROWS_AS((void)s3.predecessor_join(pt(b4, "p")), error);
}

TEST_CASE("min cover") {
    algebra l3 = L3();
    subalgebra s3 = full_subalgebra(l3);
    for (const auto& x : l3.elements()) CHECK(s3.min_cover(x) == x);

    subalgebra constants = generated_subalgebra(l3, {});
    CHECK(constants.min_cover(pt(l3, "p")) == l3.top());

    // in the lambda poset, m = a v b is the least carrier element over a
    algebra l5s = L5s();
    downset m = join(pt(l5s, "a"), pt(l5s, "b"));
    subalgebra s(l5s, {l5s.bot(), m, l5s.top()});
    CHECK(s.min_cover(pt(l5s, "a")) == m);
    CHECK(s.min_cover(m) == m);

    // min_cover is the least carrier element above x; the predecessor join of
    // a carrier join irreducible is the greatest carrier element below it
    for (const auto& L : {L5(), L5s(), B4()}) {
        for (const auto& S : enumerate_subalgebras(L)) {
            for (const auto& x : L.elements()) {
                downset mc = S.min_cover(x);
                CHECK(S.contains(mc));
                CHECK(leq(x, mc));
                for (const auto& t : S.carrier())
                    if (leq(x, t)) CHECK(leq(mc, t));
            }
            for (const auto& g : S.jir()) {
                downset pj = S.predecessor_join(g);
                CHECK(S.contains(pj));
                CHECK(leq(pj, g));
                CHECK(pj != g);
                for (const auto& t : S.carrier())
                    if (leq(t, g) && t != g) CHECK(leq(t, pj));
            }
        }
    }
}

TEST_CASE("join irreducibles of a subalgebra use the carrier order") {
    algebra b4 = B4();
    subalgebra constants = generated_subalgebra(b4, {});
    auto irr = constants.jir();
    REQUIRE(irr.size() == 1);
    CHECK(irr[0] == b4.top());   // 1 is irreducible in {0,1} but not in B4

    subalgebra full = full_subalgebra(b4);
    auto irr4 = full.jir();
    REQUIRE(irr4.size() == 2);
    CHECK(irr4[0] == pt(b4, "p"));
    CHECK(irr4[1] == pt(b4, "q"));
}

TEST_CASE("is_subalgebra reports the first closure violation") {
    algebra b4 = B4();
    closure_report ok = is_subalgebra(b4, {b4.bot(), b4.top()});
    CHECK(ok.ok);

    // {0, p, 1} is not closed: 1 - p = q is missing
    closure_report bad = is_subalgebra(b4, {b4.bot(), pt(b4, "p"), b4.top()});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation == "({p,q},{p},-)");
}

TEST_CASE("dualization names points after maximal elements") {
    algebra l5s = L5s();
    downset m = join(pt(l5s, "a"), pt(l5s, "b"));
    subalgebra s(l5s, {l5s.bot(), m, l5s.top()});
    dualization d = dualize(s);
    REQUIRE(d.pos->size() == 2);
    CHECK(d.pos->name(0) == "a+b");
    CHECK(d.pos->name(1) == "t");
    CHECK(d.pos->leq(0, 1));
    // iota maps the carrier isomorphically onto the dual downsets
    CHECK(d.iota(s, l5s.bot()).is_empty());
    CHECK(d.iota(s, m) == principal(d.pos, 0));
    CHECK(d.iota(s, l5s.top()).is_full());
}
