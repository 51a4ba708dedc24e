#include <doctest.h>

#include "coheyt/variety.hpp"
#include "coheyt/witness.hpp"
#include "fixtures.hpp"

using namespace coheyt;
using namespace fixtures;

TEST_CASE("parallel scans return the serial reference result") {
    // least index semantics on synthetic predicates
    for (std::uint64_t n : {0ull, 1ull, 17ull, 4096ull, 100000ull}) {
        auto pred = [](std::uint64_t i) { return i % 9973 == 9000; };
        CHECK(find_first_serial(n, pred) == find_first_parallel(n, pred));
        auto never = [](std::uint64_t) { return false; };
        CHECK_FALSE(find_first_parallel(n, never).has_value());
    }

    // equational checks agree mode by mode, counterexamples included
    for (const auto& L : {L5(), L5s(), B4(), chain(4)})
        for (int k = 2; k <= 7; ++k) {
            variety_tag v = static_cast<variety_tag>(k);
            variety_report s = check_equational(L, v, scan_mode::serial);
            variety_report p = check_equational(L, v, scan_mode::parallel);
            CHECK(s.member == p.member);
            CHECK(s.counterexample.has_value() == p.counterexample.has_value());
            if (s.counterexample)
                CHECK(s.counterexample->first == p.counterexample->first);
        }

    // axiom scans agree instance by instance
    for (const auto& L : {L3(), B4(), L5()}) {
        axiom_report s = check_splitting(L, 1, scan_mode::serial);
        axiom_report p = check_splitting(L, 1, scan_mode::parallel);
        REQUIRE(s.instances.size() == p.instances.size());
        CHECK(s.holds == p.holds);
        for (std::size_t i = 0; i < s.instances.size(); ++i) {
            CHECK(s.instances[i].input[0] == p.instances[i].input[0]);
            CHECK(s.instances[i].witness.has_value() == p.instances[i].witness.has_value());
        }
    }
}
