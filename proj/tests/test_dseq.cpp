#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dseq.hpp"

using namespace tspp5;

TEST_CASE("d1 and d2") {
    DSequence d1 = d_initial();
    CHECK(d1.alpha == 1);
    CHECK(d1.entries == std::map<long, Int>{{1, Int(5)}});

    auto [a, b] = appendix_rows();
    DSequence d2 = d_next(d1, a, b);
    CHECK(d2.alpha == 2);
    // d2 = 5 * (A row 1)
    std::map<long, Int> expected = {{1, 55}, {2, -300}, {3, 875}, {4, -1250}, {5, 625}};
    CHECK(d2.entries == expected);
}

TEST_CASE("paper values for d3 and d5") {
    DSequence d3 = d_sequence(3);
    CHECK(d3.entry(1) == -17425);
    CHECK(d3.entry(2) == 7202900);
    CHECK(d3.max_support() == 26);

    DSequence d5 = d_sequence(5);
    CHECK(d5.entry(1) == Int("50939723621557145369305000"));
    CHECK(d5.entry(2) == Int("-3187319615560137531159061425719921437000"));

    CHECK(verify_paper_d().passed());
}

TEST_CASE("T route equals two steps of the A/B route") {
    CHECK(d_sequence(3, true).entries == d_sequence(3).entries);
    CHECK(d_sequence(5, true).entries == d_sequence(5).entries);
    CHECK(d_sequence(7, true).entries == d_sequence(7).entries);
}

TEST_CASE("d_via_t preconditions") {
    auto [a, b] = appendix_rows();
    extend_to(b, 25);
    CoeffMatrix t = t_matrix(a, b, 5);
    CHECK_THROWS_AS(d_via_t(DSequence{2, {{1, Int(1)}}}, t), std::invalid_argument);
    CHECK_THROWS_AS(d_via_t(DSequence{1, {{9, Int(1)}}}, t), MissingPriorRows);
    CHECK_THROWS_AS(d_sequence(4, true), std::invalid_argument);
}

TEST_CASE("d_next requires materialized rows") {
    auto [a, b] = appendix_rows();
    DSequence wide{1, {{7, Int(1)}}};
    CHECK_THROWS_AS(d_next(wide, a, b), MissingPriorRows);
}

TEST_CASE("series route instances") {
    // D_1 = 5X
    LaurentSeries d1 = d_series_direct(1, 200);
    LaurentSeries x = expand(x_spec(), 200);
    CHECK(equal_on_window(d1, mul(x, Int(5))));
    CHECK(d1.prec() >= 200);
}

TEST_CASE("matrix route equals series route (Theorem instances)") {
    CHECK(verify_thd(1, 200).passed());
    CHECK(verify_thd(2, 100).passed());
    CHECK(verify_thd(3, 50).passed());
}

TEST_CASE("valuation transfer: odd d entries divisible by 5^alpha") {
    for (long alpha : {1L, 2L, 3L}) {
        DSequence d = d_sequence(2 * alpha - 1);
        Int m;
        mpz_ui_pow_ui(m.get_mpz_t(), 5, static_cast<unsigned long>(alpha));
        for (const auto& [j, v] : d.entries) CHECK(v % m == 0);
    }
}

TEST_CASE("series route budget") {
    CHECK_THROWS_AS(d_series_direct(6, 10), PrecisionBudgetExceeded);
    CHECK_THROWS_AS(d_series_direct(3, 50, 1000), PrecisionBudgetExceeded);
}

TEST_CASE("g-d subsequence identities") {
    CHECK(verify_thgd(1, 200).passed());
    CHECK(verify_thgd(2, 50).passed());
}

TEST_CASE("thgd alpha=1 head: constant term is g(4) = 5") {
    // the odd identity at n=0 reads g(4) = 5 * [q^0] E(q^10)^3/E(q^5)^2
    CountTable g = g_table(4);
    CHECK(g.at(4) == 5);
}

TEST_CASE("dseq json") {
    CHECK(d_initial().to_json() == "{\"alpha\":1,\"entries\":{\"1\":\"5\"}}");
}
