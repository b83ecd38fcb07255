#include "partitions.hpp"

#include <cstdint>

namespace tspp5 {
namespace {

constexpr uint64_t kU64ModLimit = 1ull << 31; // sums/products stay in 64 bits

// Generalized pentagonal exponents of E(q) with their signs, up to limit.
std::vector<std::pair<long, int>> pentagonal_terms(long limit) {
    std::vector<std::pair<long, int>> terms;
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 > limit && e2 > limit) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (e1 <= limit) terms.emplace_back(e1, sign);
        if (e2 <= limit) terms.emplace_back(e2, sign);
    }
    return terms;
}

// Jacobi cube E(q)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, at scale 2.
std::vector<std::pair<long, long>> cube_scale2_terms(long limit) {
    std::vector<std::pair<long, long>> terms;
    for (long k = 0; k * (k + 1) <= limit; ++k)
        terms.emplace_back(k * (k + 1), (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1));
    return terms;
}

std::vector<uint64_t> build_s_u64(long up_to, uint64_t m) {
    std::vector<uint64_t> values(up_to + 1, 0), prod(up_to + 1, 0);
    values[0] = 1 % m;
    prod[0] = 1 % m;
    for (long n = 1; 3 * n - 2 <= up_to; ++n) {
        long base = 3 * n - 2;
        long lim = up_to - base; // product is only ever read up to here
        if (n >= 2) {
            long e = 6 * (n - 2) + 3;
            for (long k = lim; k >= e; --k) {
                uint64_t v = prod[k] + prod[k - e];
                if (v >= m) v -= m;
                prod[k] = v;
            }
        }
        for (long k = 0; k <= lim; ++k) {
            uint64_t v = values[base + k] + prod[k];
            if (v >= m) v -= m;
            values[base + k] = v;
        }
    }
    return values;
}

std::vector<Int> build_s_mpz(long up_to, const Int& m) {
    const bool reduce = m != 0;
    std::vector<Int> values(up_to + 1), prod(up_to + 1);
    values[0] = 1;
    prod[0] = 1;
    for (long n = 1; 3 * n - 2 <= up_to; ++n) {
        long base = 3 * n - 2;
        long lim = up_to - base;
        if (n >= 2) {
            long e = 6 * (n - 2) + 3;
            for (long k = lim; k >= e; --k) {
                prod[k] += prod[k - e];
                if (reduce && prod[k] >= m) prod[k] -= m;
            }
        }
        for (long k = 0; k <= lim; ++k) {
            values[base + k] += prod[k];
            if (reduce && values[base + k] >= m) values[base + k] -= m;
        }
    }
    return values;
}

std::vector<uint64_t> build_g_u64(long up_to, uint64_t m) {
    auto pent = pentagonal_terms(up_to);
    auto cube = cube_scale2_terms(up_to);
    std::vector<uint64_t> p1(up_to + 1), p2(up_to + 1), g(up_to + 1);
    p1[0] = 1 % m;
    p2[0] = 1 % m;
    for (long n = 1; n <= up_to; ++n) {
        // E * p1 = 1 and E * p2 = p1, resolved for the top coefficient
        uint64_t a1 = 0, a2 = 0;
        for (auto [e, sign] : pent) {
            if (e > n) break;
            if (sign > 0) { // contributes +p, so subtract on the other side
                a1 = (a1 + m - p1[n - e]) % m;
                a2 = (a2 + m - p2[n - e]) % m;
            } else {
                a1 = (a1 + p1[n - e]) % m;
                a2 = (a2 + p2[n - e]) % m;
            }
        }
        p1[n] = a1;
        p2[n] = (a2 + p1[n]) % m;
    }
    for (long n = 0; n <= up_to; ++n) {
        uint64_t acc = 0;
        for (auto [e, c] : cube) {
            if (e > n) break;
            uint64_t cm = static_cast<uint64_t>(c < 0 ? -c : c) % m;
            uint64_t term = (cm * p2[n - e]) % m;
            acc = c < 0 ? (acc + m - term) % m : (acc + term) % m;
        }
        g[n] = acc;
    }
    return g;
}

std::vector<Int> build_g_mpz(long up_to, const Int& m) {
    const bool reduce = m != 0;
    auto pent = pentagonal_terms(up_to);
    auto cube = cube_scale2_terms(up_to);
    std::vector<Int> p1(up_to + 1), p2(up_to + 1), g(up_to + 1);
    p1[0] = 1;
    p2[0] = 1;
    for (long n = 1; n <= up_to; ++n) {
        Int a1 = 0, a2 = 0;
        for (auto [e, sign] : pent) {
            if (e > n) break;
            if (sign > 0) {
                a1 -= p1[n - e];
                a2 -= p2[n - e];
            } else {
                a1 += p1[n - e];
                a2 += p2[n - e];
            }
        }
        p1[n] = a1;
        p2[n] = a2 + a1;
        if (reduce) {
            mpz_fdiv_r(p1[n].get_mpz_t(), p1[n].get_mpz_t(), m.get_mpz_t());
            mpz_fdiv_r(p2[n].get_mpz_t(), p2[n].get_mpz_t(), m.get_mpz_t());
        }
    }
    for (long n = 0; n <= up_to; ++n) {
        Int acc = 0;
        for (auto [e, c] : cube) {
            if (e > n) break;
            if (c > 0)
                mpz_addmul_ui(acc.get_mpz_t(), p2[n - e].get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_submul_ui(acc.get_mpz_t(), p2[n - e].get_mpz_t(), static_cast<unsigned long>(-c));
        }
        if (reduce) mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
        g[n] = acc;
    }
    return g;
}

std::vector<Int> to_int_vector(const std::vector<uint64_t>& v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = static_cast<unsigned long>(v[i]);
    return out;
}

} // namespace

const Int& CountTable::at(long n) const {
    if (n < 0 || n > up_to)
        throw PrecisionExceeded("CountTable: index " + std::to_string(n) +
                                " outside table of size " + std::to_string(up_to));
    return values[n];
}

CountTable s_table(long up_to, const Int& modulus) {
    if (up_to < 0) throw std::invalid_argument("s_table: upTo must be >= 0");
    if (modulus < 0) throw std::invalid_argument("s_table: modulus must be >= 0");
    CountTable t{TableKind::S, up_to, modulus, {}};
    if (modulus != 0 && modulus < kU64ModLimit)
        t.values = to_int_vector(build_s_u64(up_to, modulus.get_ui()));
    else
        t.values = build_s_mpz(up_to, modulus);
    return t;
}

CountTable g_table(long up_to, const Int& modulus) {
    if (up_to < 0) throw std::invalid_argument("g_table: upTo must be >= 0");
    if (modulus < 0) throw std::invalid_argument("g_table: modulus must be >= 0");
    CountTable t{TableKind::G, up_to, modulus, {}};
    if (modulus != 0 && modulus < kU64ModLimit)
        t.values = to_int_vector(build_g_u64(up_to, modulus.get_ui()));
    else
        t.values = build_g_mpz(up_to, modulus);
    return t;
}

Report check_fg(const CountTable& s, const CountTable& g) {
    if (s.kind != TableKind::S || g.kind != TableKind::G)
        throw std::invalid_argument("check_fg: expects an S table and a G table");
    if (s.modulus != g.modulus)
        throw std::invalid_argument("check_fg: tables must share a coefficient mode");
    Report r;
    r.name = "fg-identity";
    ReportTimer timer(r);
    long comparisons = 0;
    for (long n = 0; 6 * n + 1 <= s.up_to && n <= g.up_to; ++n) {
        ++comparisons;
        if (s.values[6 * n + 1] != g.values[n]) {
            r.witness("n=" + std::to_string(n),
                      "s(6n+1)=" + s.values[6 * n + 1].get_str() +
                          " g(n)=" + g.values[n].get_str());
            break; // first mismatch is the witness
        }
    }
    r.param("upTo", s.up_to);
    r.param("comparisons", comparisons);
    return r;
}

Report check_fg(long up_to) {
    CountTable s = s_table(up_to);
    CountTable g = g_table(up_to / 6);
    return check_fg(s, g);
}

Report check_mod3_vanishing(const CountTable& s) {
    if (s.kind != TableKind::S)
        throw std::invalid_argument("check_mod3_vanishing: expects an S table");
    if (s.modulus != 0)
        throw std::invalid_argument("check_mod3_vanishing: needs the exact table (zeros are exact)");
    Report r;
    r.name = "s-mod3-vanishing";
    ReportTimer timer(r);
    long failures = 0;
    for (long n = 1; n <= s.up_to; ++n) {
        if (n % 3 != 0 && n % 3 != 2) continue;
        if (s.values[n] != 0) {
            ++failures;
            if (r.witnesses.size() < 20) r.witness(n, s.values[n]);
        }
    }
    r.param("upTo", s.up_to);
    r.param("failures", failures);
    return r;
}

Report check_mod3_vanishing(long up_to) {
    CountTable s = s_table(up_to);
    return check_mod3_vanishing(s);
}

} // namespace tspp5
