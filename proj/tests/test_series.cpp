#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etaq.hpp"
#include "laurent.hpp"

using namespace tspp5;

namespace {

LaurentSeries series(long min_exp, std::vector<Int> coeffs, long prec) {
    coeffs.resize(prec - min_exp); // pad with zeros up to the window
    return LaurentSeries(min_exp, std::move(coeffs), prec);
}

// Uniform random series with unit leading coefficient, for round trips.
LaurentSeries random_unit_series(std::mt19937& rng, long prec) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> lead(0, 1);
    std::uniform_int_distribution<long> min_exp(-3, 3);
    long me = min_exp(rng);
    std::vector<Int> c(prec - me);
    c[0] = lead(rng) ? 1 : -1;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = coeff(rng);
    return LaurentSeries(me, std::move(c), prec);
}

LaurentSeries random_series(std::mt19937& rng, long prec) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> min_exp(-3, 3);
    long me = min_exp(rng);
    std::vector<Int> c(prec - me);
    for (auto& x : c) x = coeff(rng);
    return LaurentSeries(me, std::move(c), prec);
}

// Oracle for the E(q)^2 E(q)^-2 example: partition counts by dynamic
// programming, independent of the series path.
std::vector<Int> partition_counts(long up_to) {
    std::vector<Int> p(up_to + 1);
    p[0] = 1;
    for (long part = 1; part <= up_to; ++part)
        for (long n = part; n <= up_to; ++n) p[n] += p[n - part];
    return p;
}

// 2-colored partition counts: each part available in two colors.
std::vector<Int> two_colored_counts(long up_to) {
    std::vector<Int> p(up_to + 1);
    p[0] = 1;
    for (int color = 0; color < 2; ++color)
        for (long part = 1; part <= up_to; ++part)
            for (long n = part; n <= up_to; ++n) p[n] += p[n - part];
    return p;
}

} // namespace

TEST_CASE("construction canonicalizes") {
    LaurentSeries z = series(2, {0, 0, 0}, 5);
    CHECK(z.is_zero());
    CHECK(z.min_exp() == 5);
    CHECK(z.prec() == 5);
    CHECK(z == LaurentSeries::zero(5));

    LaurentSeries f = series(-1, {0, 3, 0}, 2); // leading zero trimmed
    CHECK(f.min_exp() == 0);
    CHECK(f.coeff(0) == 3);
    CHECK(f.coeff(-5) == 0);
}

TEST_CASE("add basics") {
    // (1 + q) + (-1 + q) = 2q
    LaurentSeries s = add(series(0, {1, 1}, 2), series(0, {-1, 1}, 2));
    CHECK(s == series(1, {2}, 2));

    // f + 0 = f
    LaurentSeries f = series(-2, {1, 0, 7}, 1);
    CHECK(add(f, LaurentSeries::zero(5)) == truncate(f, 1));

    // window intersection: (q^-1 + 1, prec 5) + (q^2, prec 3)
    LaurentSeries g = add(series(-1, {1, 1, 0, 0, 0, 0}, 5), series(2, {1}, 3));
    CHECK(g.prec() == 3);
    CHECK(g.coeff(-1) == 1);
    CHECK(g.coeff(0) == 1);
    CHECK(g.coeff(2) == 1);
}

TEST_CASE("mul basics") {
    // (1 - q) * sum q^n = 1
    std::vector<Int> ones(20, 1);
    LaurentSeries geo = series(0, std::move(ones), 20);
    LaurentSeries prod = mul(series(0, {1, -1}, 20), geo);
    CHECK(prod == LaurentSeries::constant(1, 20));

    // q^-4 * q^4 = 1
    LaurentSeries m = mul(LaurentSeries::monomial(1, -4, -3), LaurentSeries::monomial(1, 4, 5));
    CHECK(m.coeff(0) == 1);

    // E(q)^2 * E(q)^-2 = 1 to precision 100
    LaurentSeries e = euler_product(100);
    CHECK(mul(pow(e, 2), pow(e, -2)) == LaurentSeries::constant(1, 100));
}

TEST_CASE("invert") {
    CHECK(invert(series(0, {1, -1, 0, 0}, 4)) == series(0, {1, 1, 1, 1}, 4));

    // invert(E(q)) is the partition generating function
    LaurentSeries pgen = invert(euler_product(40));
    auto p = partition_counts(39);
    for (long n = 0; n < 40; ++n) CHECK(pgen.coeff(n) == p[n]);
    CHECK(pgen.coeff(5) == 7);
    CHECK(pgen.coeff(6) == 11);

    CHECK_THROWS_AS(invert(series(0, {2, 1}, 2)), NonUnitLeadingCoefficient);
    CHECK_THROWS_AS(invert(LaurentSeries::zero(4)), NonUnitLeadingCoefficient);
}

TEST_CASE("pow") {
    LaurentSeries f = series(0, {1, 1, 4}, 3);
    CHECK(pow(f, 0) == LaurentSeries::constant(1, 3));
    CHECK(pow(series(0, {1, 1, 0}, 3), 2) == series(0, {1, 2, 1}, 3));

    // E(q)^-2 counts 2-colored partitions
    LaurentSeries e2 = pow(euler_product(30), -2);
    auto p2 = two_colored_counts(29);
    for (long n = 0; n < 30; ++n) CHECK(e2.coeff(n) == p2[n]);
    CHECK(e2.coeff(1) == 2);
    CHECK(e2.coeff(5) == 36);
}

TEST_CASE("scale") {
    CHECK(scale(series(0, {1, 1}, 2), 2) == series(0, {1, 0, 1}, 3));
    // q^-4 becomes q^-20; the window scales to t*prec - (t-1)
    CHECK(scale(LaurentSeries::monomial(1, -4, -3), 5) == LaurentSeries::monomial(1, -20, -19));

    // E(q^10): pentagonal exponents times 10
    LaurentSeries e10 = scale(euler_product(10), 10);
    CHECK(e10.prec() == 91);
    CHECK(e10.coeff(0) == 1);
    CHECK(e10.coeff(10) == -1);
    CHECK(e10.coeff(20) == -1);
    CHECK(e10.coeff(30) == 0);
    CHECK(e10.coeff(50) == 1);
    CHECK(e10.coeff(70) == 1);
}

TEST_CASE("extract_progression") {
    std::vector<Int> ones(25, 1);
    LaurentSeries geo = series(0, std::move(ones), 25);
    LaurentSeries u = extract_progression(geo, 0, 5);
    CHECK(u.prec() == 5);
    for (long n = 0; n < 5; ++n) CHECK(u.coeff(n) == 1);

    CHECK(extract_progression(LaurentSeries::monomial(1, -5, -4), 0, 5) ==
          LaurentSeries::monomial(1, -1, 0));
    CHECK(extract_progression(LaurentSeries::monomial(1, -4, -3), 0, 5).is_zero());
}

TEST_CASE("extract_progression partitions the series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentSeries f = random_series(rng, 30);
        for (long m : {2L, 3L, 5L}) {
            LaurentSeries sum = LaurentSeries::zero(f.prec());
            for (long r = 0; r < m; ++r)
                sum = add(sum, shift(scale(extract_progression(f, r, m), m), r));
            CHECK(equal_on_window(sum, f));
        }
    }
}

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(series(0, {5, 7}, 2), 5) == series(1, {2}, 2));
    // -17425 = -140*125 + 75, the canonical representative in [0,125)
    CHECK(reduce_mod(series(1, {-17425}, 2), 125) == series(1, {75}, 2));
    CHECK_THROWS_AS(reduce_mod(series(0, {1}, 1), 1), std::invalid_argument);

    // reduction is a ring homomorphism
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentSeries f = random_series(rng, 12);
        LaurentSeries g = random_series(rng, 12);
        Int m = 25;
        CHECK(reduce_mod(mul(f, g), m) == reduce_mod(mul(reduce_mod(f, m), reduce_mod(g, m)), m));
        CHECK(reduce_mod(add(f, g), m) == reduce_mod(add(reduce_mod(f, m), reduce_mod(g, m)), m));
    }
}

TEST_CASE("coeff precision guard") {
    LaurentSeries f = series(0, {1, 0, 3}, 3);
    CHECK(f.coeff(2) == 3);
    CHECK(f.coeff(-1) == 0);
    CHECK_THROWS_AS(f.coeff(3), PrecisionExceeded);
    LaurentSeries g = series(0, std::vector<Int>(10, 1), 10);
    CHECK_THROWS_AS(g.coeff(10), PrecisionExceeded);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentSeries f = random_series(rng, 14);
        LaurentSeries g = random_series(rng, 14);
        LaurentSeries h = random_series(rng, 14);
        CHECK(equal_on_window(add(f, g), add(g, f)));
        CHECK(equal_on_window(mul(f, g), mul(g, f)));
        CHECK(equal_on_window(add(add(f, g), h), add(f, add(g, h))));
        CHECK(equal_on_window(mul(mul(f, g), h), mul(f, mul(g, h))));
        CHECK(equal_on_window(mul(f, add(g, h)), add(mul(f, g), mul(f, h))));
    }
}

TEST_CASE("invert round trip on random unit series") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentSeries f = random_unit_series(rng, 20);
        LaurentSeries prod = mul(f, invert(f));
        CHECK(equal_on_window(prod, LaurentSeries::constant(1, prod.prec())));
    }
}

TEST_CASE("precision soundness: higher precision never changes a coefficient") {
    // one representative pipeline: the xi expansion through U5
    LaurentSeries lo = extract_progression(expand(xi_spec(), 200), 0, 5);
    LaurentSeries hi = extract_progression(expand(xi_spec(), 320), 0, 5);
    CHECK(hi.prec() >= lo.prec());
    for (long e = lo.min_exp(); e < lo.prec(); ++e) CHECK(lo.coeff(e) == hi.coeff(e));
}

TEST_CASE("json shape") {
    LaurentSeries f = series(-1, {1, 0, -12}, 2);
    CHECK(f.to_json() == "{\"minExp\":-1,\"prec\":2,\"coeffs\":[\"1\",\"0\",\"-12\"]}");
}
