// Exercises the shared-library surface the way an external consumer would:
// only include/tspp5.h, opaque handles, and status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "tspp5.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    tspp5_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(tspp5_version()) == "1.0.0");
    CHECK(std::string(tspp5_status_name(TSPP5_OK)) == "ok");
    CHECK(std::string(tspp5_status_name(TSPP5_ENONUNIT)) == "non-unit-leading-coefficient");
}

TEST_CASE("series lifecycle through the C surface") {
    tspp5_series* x = nullptr;
    REQUIRE(tspp5_series_named("X", 50, &x) == TSPP5_OK);
    CHECK(tspp5_series_min_exp(x) == 0);
    CHECK(tspp5_series_prec(x) == 50);

    char* c = nullptr;
    REQUIRE(tspp5_series_coeff(x, 1, &c) == TSPP5_OK);
    CHECK(take(c) == "4");

    tspp5_series* x2 = nullptr;
    REQUIRE(tspp5_series_pow(x, 2, &x2) == TSPP5_OK);
    REQUIRE(tspp5_series_coeff(x2, 1, &c) == TSPP5_OK);
    CHECK(take(c) == "8");

    tspp5_series* u = nullptr;
    REQUIRE(tspp5_series_extract(x2, 0, 5, &u) == TSPP5_OK);
    REQUIRE(tspp5_series_coeff(u, 0, &c) == TSPP5_OK);
    CHECK(take(c) == "1");

    tspp5_series_free(u);
    tspp5_series_free(x2);
    tspp5_series_free(x);
}

TEST_CASE("errors surface as status codes with messages") {
    tspp5_series* s = nullptr;
    CHECK(tspp5_series_named("bogus", 10, &s) == TSPP5_EUSAGE);
    CHECK(s == nullptr);
    CHECK(std::strlen(tspp5_last_error()) > 0);

    tspp5_series* e = nullptr;
    REQUIRE(tspp5_series_named("E", 10, &e) == TSPP5_OK);
    char* c = nullptr;
    CHECK(tspp5_series_coeff(e, 99, &c) == TSPP5_EPRECISION);

    tspp5_series* two = nullptr;
    tspp5_series* sum = nullptr;
    REQUIRE(tspp5_series_add(e, e, &sum) == TSPP5_OK); // 2 - 2q - ...
    tspp5_series* inv = nullptr;
    CHECK(tspp5_series_invert(sum, &inv) == TSPP5_ENONUNIT);
    tspp5_series_free(sum);
    tspp5_series_free(two);
    tspp5_series_free(e);
}

TEST_CASE("xi through the C surface has the expected window") {
    tspp5_series* xi = nullptr;
    REQUIRE(tspp5_series_named("xi", 40, &xi) == TSPP5_OK);
    CHECK(tspp5_series_min_exp(xi) == -4);
    char* c = nullptr;
    REQUIRE(tspp5_series_coeff(xi, -4, &c) == TSPP5_OK);
    CHECK(take(c) == "1");
    char* j = nullptr;
    REQUIRE(tspp5_series_json(xi, &j) == TSPP5_OK);
    CHECK(take(j).find("\"minExp\":-4") != std::string::npos);
    tspp5_series_free(xi);
}

TEST_CASE("tables") {
    tspp5_table* t = nullptr;
    REQUIRE(tspp5_table_compute('s', 10, nullptr, &t) == TSPP5_OK);
    CHECK(tspp5_table_up_to(t) == 10);
    const char* expected[] = {"1", "1", "0", "0", "1", "0", "0", "2", "0", "0", "2"};
    for (long n = 0; n <= 10; ++n) {
        char* v = nullptr;
        REQUIRE(tspp5_table_value(t, n, &v) == TSPP5_OK);
        CHECK(take(v) == expected[n]);
    }
    char* v = nullptr;
    CHECK(tspp5_table_value(t, 11, &v) == TSPP5_EPRECISION);
    tspp5_table_free(t);

    tspp5_table* g = nullptr;
    REQUIRE(tspp5_table_compute('g', 4, "5", &g) == TSPP5_OK);
    REQUIRE(tspp5_table_value(g, 4, &v) == TSPP5_OK);
    CHECK(take(v) == "0"); // g(4) = 5
    tspp5_table_free(g);
}

TEST_CASE("matrices and the appendix check") {
    tspp5_matrix* a = nullptr;
    REQUIRE(tspp5_matrix_appendix('a', &a) == TSPP5_OK);
    CHECK(tspp5_matrix_rows(a) == 5);
    char* v = nullptr;
    REQUIRE(tspp5_matrix_entry(a, 1, 1, &v) == TSPP5_OK);
    CHECK(take(v) == "11");
    REQUIRE(tspp5_matrix_entry(a, 1, 7, &v) == TSPP5_OK);
    CHECK(take(v) == "0");
    CHECK(tspp5_matrix_entry(a, 9, 1, &v) == TSPP5_EMISSINGROWS);
    tspp5_matrix_free(a);

    tspp5_matrix* computed = nullptr;
    REQUIRE(tspp5_matrix_compute('b', 6, 450, &computed) == TSPP5_OK);
    CHECK(tspp5_matrix_rows(computed) == 6);
    REQUIRE(tspp5_matrix_entry(computed, 1, 6, &v) == TSPP5_OK);
    CHECK(take(v) == "3125");
    tspp5_matrix_free(computed);
}

TEST_CASE("d sequence handles") {
    tspp5_dseq* d = nullptr;
    REQUIRE(tspp5_dseq_compute(3, 0, &d) == TSPP5_OK);
    CHECK(tspp5_dseq_alpha(d) == 3);
    CHECK(tspp5_dseq_max_support(d) == 26);
    char* v = nullptr;
    REQUIRE(tspp5_dseq_entry(d, 1, &v) == TSPP5_OK);
    CHECK(take(v) == "-17425");
    tspp5_dseq_free(d);

    tspp5_dseq* bad = nullptr;
    CHECK(tspp5_dseq_compute(4, 1, &bad) == TSPP5_EUSAGE);
}

TEST_CASE("verification reports through the C surface") {
    tspp5_report* r = nullptr;
    REQUIRE(tspp5_verify_sigmas(420, &r) == TSPP5_OK);
    CHECK(tspp5_report_passed(r) == 1);
    char* name = nullptr;
    REQUIRE(tspp5_report_name(r, &name) == TSPP5_OK);
    CHECK(take(name) == "sigma-polynomials");
    char* json = nullptr;
    REQUIRE(tspp5_report_json(r, &json) == TSPP5_OK);
    CHECK(take(json).find("\"status\":\"pass\"") != std::string::npos);
    tspp5_report_free(r);

    REQUIRE(tspp5_verify_claim('s', 1, 10, 5, 100, &r) == TSPP5_OK);
    CHECK(tspp5_report_passed(r) == 1);
    tspp5_report_free(r);

    // a false claim: report constructs fine but fails
    REQUIRE(tspp5_verify_claim('s', 1, 3, 1, 5, &r) == TSPP5_OK);
    CHECK(tspp5_report_passed(r) == 0);
    tspp5_report_free(r);

    CHECK(tspp5_verify_claim('x', 1, 3, 1, 5, &r) == TSPP5_EUSAGE);

    // budget errors arrive as status codes
    CHECK(tspp5_verify_thd(6, 10, &r) == TSPP5_EBUDGET);
}

TEST_CASE("bounds through the C surface") {
    tspp5_report* r = nullptr;
    REQUIRE(tspp5_verify_bounds('a', 8, 40, &r) == TSPP5_OK);
    CHECK(tspp5_report_passed(r) == 1);
    tspp5_report_free(r);
    CHECK(tspp5_verify_bounds('q', 8, 40, &r) == TSPP5_EUSAGE);
}
