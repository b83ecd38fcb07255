#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congr.hpp"

using namespace tspp5;

TEST_CASE("claim sweeps: the two classical congruences") {
    // s(10n+5) == 0 mod 5 (quick slice)
    Report r1 = verify_claim({TableKind::S, 1, 10, 5, 400});
    CHECK(r1.passed());
    // s(250n+125) == 0 mod 25
    Report r2 = verify_claim({TableKind::S, 2, 250, 125, 60});
    CHECK(r2.passed());
}

TEST_CASE("claim sweep for g at modulus 125") {
    Report r = verify_claim({TableKind::G, 3, 3125, 2604, 5});
    CHECK(r.passed());
}

TEST_CASE("claims that are false produce witnesses") {
    // s(3n+1) is not divisible by 5 in general: s(1) = 1
    Report r = verify_claim({TableKind::S, 1, 3, 1, 10});
    CHECK_FALSE(r.passed());
    CHECK(r.witnesses[0].first == "n=0");
}

TEST_CASE("reports are deterministic") {
    Report a = verify_claim({TableKind::S, 1, 10, 5, 200});
    Report b = verify_claim({TableKind::S, 1, 10, 5, 200});
    a.elapsed_ms = b.elapsed_ms = 0;
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("main theorem reduction") {
    Report r1 = main_theorem_reduction(1, 600);
    CHECK(r1.passed());
    Report r2 = main_theorem_reduction(2, 40);
    CHECK(r2.passed());
}

TEST_CASE("theta lemmas") {
    CHECK(verify_phi_lemmas(1000).passed());
    CHECK(verify_phi_lemmas(100).passed()); // smoke at the precondition floor
    CHECK_THROWS_AS(verify_phi_lemmas(10), std::invalid_argument);
}

TEST_CASE("X equals phi(-q)^8 mod 5") {
    CHECK(verify_x_phi_mod5(500).passed());
}

TEST_CASE("phi support progressions") {
    CHECK(verify_phi_progressions(2000).passed());
}

TEST_CASE("mod-125 family") {
    Report r = verify_family_125(8);
    CHECK(r.passed());
    // the g(229) and s(125) instances are inside the sweep at n=0
    CountTable g = g_table(229, Int(125));
    CHECK(g.at(229) == 0);
    CountTable s = s_table(1125, Int(125));
    CHECK(s.at(125) == 0);
    CHECK(s.at(1125) == 0);
}

TEST_CASE("mod-625 family") {
    Report r = verify_family_625(2);
    CHECK(r.passed());
    CountTable g = g_table(11979, Int(625));
    CHECK(g.at(8854) == 0);
    CHECK(g.at(11979) == 0);
    CountTable s = s_table(21875, Int(625));
    CHECK(s.at(9375) == 0);
    CHECK(s.at(21875) == 0);
}

TEST_CASE("claim parameter validation") {
    CHECK_THROWS_AS(verify_claim({TableKind::S, 0, 10, 5, 10}), std::invalid_argument);
    CHECK_THROWS_AS(verify_claim({TableKind::S, 1, 0, 5, 10}), std::invalid_argument);
    CHECK_THROWS_AS(main_theorem_reduction(0, 10), std::invalid_argument);
}
