#include <doctest.h>

#include "coheyt/witness.hpp"
#include "fixtures.hpp"

using namespace coheyt;
using namespace fixtures;

namespace {

// small deterministic generator; the exhaustive suites stop at five or six
// points, these cases probe the same laws on larger random posets
struct rng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    unsigned below(unsigned n) { return static_cast<unsigned>(next() % n); }
};

poset_ptr random_poset(rng& r, unsigned n, unsigned edge_percent) {
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
    // relations only from lower to higher index: a DAG by construction
    std::vector<mask_t> below(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (r.below(100) < edge_percent) below[j] |= mask_bit(i);
    return build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
}

downset random_downset(rng& r, const algebra& L) {
    mask_t seed = 0;
    for (unsigned i = 0; i < L.points(); ++i)
        if (r.below(3) == 0) seed |= mask_bit(i);
    return downset{L.pos(), L.pos()->closure(seed)};
}

}

TEST_CASE("co-Heyting laws on random ten-point posets") {
    rng r{0x9e3779b97f4a7c15ull};
    for (int round = 0; round < 20; ++round) {
        algebra L(random_poset(r, 10, 25));
        for (int k = 0; k < 200; ++k) {
            downset a = random_downset(r, L), b = random_downset(r, L),
                    c = random_downset(r, L);
            CHECK(leq(diff(a, b), c) == leq(a, join(b, c)));
            CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
            CHECK(diff(a, join(b, c)) == diff(diff(a, b), c));
            CHECK(diff(a, meet(b, c)) == join(diff(a, b), diff(a, c)));
            // every element is the join of its components
            downset acc = L.bot();
            for (const auto& comp : L.jir_components(a)) acc = join(acc, comp);
            CHECK(acc == a);
        }
    }
}

TEST_CASE("canonical forms are stable under random relabeling") {
    rng r{0xdeadbeefcafef00dull};
    for (int round = 0; round < 30; ++round) {
        poset_ptr P = random_poset(r, 7, 30);
        // random permutation of the points
        std::vector<unsigned> perm(P->size());
        for (unsigned i = 0; i < perm.size(); ++i) perm[i] = i;
        for (unsigned i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[r.below(i)]);
        std::vector<std::string> names(P->size());
        std::vector<mask_t> below(P->size(), 0);
        for (unsigned i = 0; i < P->size(); ++i) {
            names[perm[i]] = P->name(i);
            for (unsigned j = 0; j < P->size(); ++j)
                if (i != j && P->leq(j, i)) below[perm[i]] |= mask_bit(perm[j]);
        }
        poset_ptr Q = build_poset_from_relation(std::move(names), std::move(below),
                                                max_poset_width);
        CHECK(canonical_form_of(*P) == canonical_form_of(*Q));
    }
}

TEST_CASE("serial and parallel kernels agree on random posets") {
    rng r{0x123456789abcdef1ull};
    for (int round = 0; round < 6; ++round) {
        algebra L(random_poset(r, 9, 20));
        for (int k = 2; k <= 7; ++k) {
            variety_tag v = static_cast<variety_tag>(k);
            variety_report s = check_equational(L, v, scan_mode::serial);
            variety_report p = check_equational(L, v, scan_mode::parallel);
            CHECK(s.member == p.member);
            if (s.counterexample) {
                REQUIRE(p.counterexample.has_value());
                CHECK(s.counterexample->first == p.counterexample->first);
                CHECK(s.counterexample->second == p.counterexample->second);
            }
        }
        axiom_report s = check_density(L, 1, scan_mode::serial);
        axiom_report p = check_density(L, 1, scan_mode::parallel);
        REQUIRE(s.instances.size() == p.instances.size());
        for (std::size_t i = 0; i < s.instances.size(); ++i)
            CHECK(s.instances[i].witness == p.instances[i].witness);
    }
}

TEST_CASE("witness extensions on random members of each variety") {
    rng r{0x5555333311110000ull};
    std::size_t exercised = 0;
    for (int round = 0; round < 80; ++round) {
        algebra L(random_poset(r, 6, round % 2 ? 20 : 40));
        for (int variant = 1; variant <= 6; ++variant) {
            variety_tag v = static_cast<variety_tag>(variant);
            if (!check_equational(L, v).member) continue;
            downset a = random_downset(r, L), c = random_downset(r, L);
            if (density_hypothesis(L, variant, a, c)) {
                density_result dr = density_extension(L, a, c, variant);
                CHECK_FALSE(dr.b.is_empty());
                CHECK(variety_holds(dr.ext, v));
                ++exercised;
            }
            downset b1 = random_downset(r, L), b2 = random_downset(r, L);
            if (splitting_hypothesis(L, variant, a, b1, b2)) {
                splitting_result sr = splitting_extension(L, a, b1, b2, variant);
                CHECK(splitting_witness_ok(sr.emb.apply(a), sr.emb.apply(b1), sr.emb.apply(b2),
                                           sr.a1, sr.a2));
                CHECK(variety_holds(sr.ext, v));
                ++exercised;
            }
        }
    }
    CHECK(exercised > 15);   // the generator must actually hit hypotheses
}
