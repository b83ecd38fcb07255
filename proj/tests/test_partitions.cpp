#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etaq.hpp"
#include "partitions.hpp"

using namespace tspp5;

namespace {

// Hand expansion of the shell generating function, term by term, as an
// independent oracle for small n. Unlike the production builder this keeps
// the whole product per outer index.
std::vector<Int> s_brute(long up_to) {
    std::vector<Int> out(up_to + 1);
    out[0] = 1;
    for (long n = 1; 3 * n - 2 <= up_to; ++n) {
        std::vector<Int> prod(up_to + 1);
        prod[0] = 1;
        for (long i = 0; i <= n - 2; ++i) {
            long e = 6 * i + 3;
            for (long k = up_to; k >= e; --k) prod[k] += prod[k - e];
        }
        for (long k = 0; 3 * n - 2 + k <= up_to; ++k) out[3 * n - 2 + k] += prod[k];
    }
    return out;
}

} // namespace

TEST_CASE("s table head values") {
    CountTable s = s_table(13);
    // hand expansion of the generating function to q^10:
    // n=1 gives q, n=2 gives q^4+q^7, n=3 gives q^7+q^10+..., n=4 gives q^10+...
    std::vector<long> expected = {1, 1, 0, 0, 1, 0, 0, 2, 0, 0, 2, 0, 0, 2};
    for (long n = 0; n <= 13; ++n) CHECK(s.at(n) == expected[n]);
}

TEST_CASE("s table matches the brute-force expansion") {
    CountTable s = s_table(400);
    auto brute = s_brute(400);
    for (long n = 0; n <= 400; ++n) CHECK(s.at(n) == brute[n]);
}

TEST_CASE("s values are nonnegative and vanish mod 3") {
    CountTable s = s_table(3000);
    for (long n = 0; n <= 3000; ++n) CHECK(s.at(n) >= 0);
    for (long n = 1; n <= 3000; ++n)
        if (n % 3 == 0 || n % 3 == 2) CHECK(s.at(n) == 0);
}

TEST_CASE("g table head values and eta-quotient oracle") {
    CountTable g = g_table(300);
    CHECK(g.at(0) == 1);
    CHECK(g.at(1) == 2);
    CHECK(g.at(4) == 5);
    LaurentSeries quotient = expand(g_spec(), 301);
    for (long n = 0; n <= 300; ++n) CHECK(g.at(n) == quotient.coeff(n));
    for (long n = 0; n <= 300; ++n) CHECK(g.at(n) >= 0);
}

TEST_CASE("g(1) equals s(7) through the shell expansion") {
    CountTable s = s_table(25);
    CountTable g = g_table(4);
    CHECK(g.at(1) == s.at(7));
    CHECK(g.at(1) == 2);
    CHECK(g.at(4) == s.at(25)); // five contributing outer indices at q^25
}

TEST_CASE("modular tables agree with exact tables") {
    Int m = 125;
    CountTable se = s_table(2000);
    CountTable sm = s_table(2000, m);
    for (long n = 0; n <= 2000; ++n) CHECK(sm.at(n) == se.at(n) % m);
    CountTable ge = g_table(2000);
    CountTable gm = g_table(2000, m);
    for (long n = 0; n <= 2000; ++n) CHECK(gm.at(n) == ge.at(n) % m);
}

TEST_CASE("modular path falls back to bignum moduli") {
    Int huge = Int("6277101735386680763835789423207666416102355444464034512896"); // 2^192
    CountTable sm = s_table(60, huge);
    CountTable se = s_table(60);
    for (long n = 0; n <= 60; ++n) CHECK(sm.at(n) == se.at(n));
}

TEST_CASE("fg identity") {
    CHECK(check_fg(30000).passed());

    CountTable s = s_table(200);
    CountTable g = g_table(33);
    Report ok = check_fg(s, g);
    CHECK(ok.passed());

    // harness self-test: corrupt one value and expect witness n=1
    s.values[7] = 3;
    Report bad = check_fg(s, g);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].first == "n=1");
}

TEST_CASE("fg identity with tiny window") {
    CountTable s = s_table(7);
    CountTable g = g_table(1);
    Report r = check_fg(s, g);
    CHECK(r.passed());
    CHECK(r.params.back().second == "2"); // comparisons: n = 0, 1
}

TEST_CASE("mod-3 vanishing report") {
    Report r = check_mod3_vanishing(30000);
    CHECK(r.passed());
    CHECK_THROWS_AS(check_mod3_vanishing(s_table(50, Int(5))), std::invalid_argument);
}

TEST_CASE("table bounds") {
    CountTable s = s_table(10);
    CHECK_THROWS_AS(s.at(11), PrecisionExceeded);
    CHECK_THROWS_AS(s_table(-1), std::invalid_argument);
}
