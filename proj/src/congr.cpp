#include "congr.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tspp5 {
namespace {

Int pow5(unsigned long e) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 5, e);
    return v;
}

constexpr int kGuardDigits = 2;
constexpr int kSpotChecks = 10;

// Deterministic per-claim seed so identical inputs produce identical reports.
uint64_t claim_seed(const CongruenceClaim& c) {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t v : {static_cast<uint64_t>(c.target == TableKind::S ? 1 : 2),
                       static_cast<uint64_t>(c.modulus_exp), static_cast<uint64_t>(c.stride),
                       static_cast<uint64_t>(c.offset), static_cast<uint64_t>(c.n_max)}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// Ten distinct spot indices; for S only indices with stride*n+offset == 1
// (mod 6) qualify, since those are the ones with an exact route through g.
std::vector<long> spot_indices(const CongruenceClaim& c) {
    std::mt19937_64 rng(claim_seed(c));
    std::vector<long> picks;
    for (int attempt = 0; attempt < 200 && static_cast<int>(picks.size()) < kSpotChecks;
         ++attempt) {
        long n = static_cast<long>(rng() % static_cast<uint64_t>(c.n_max + 1));
        if (c.target == TableKind::S && (c.stride * n + c.offset) % 6 != 1) continue;
        if (std::find(picks.begin(), picks.end(), n) == picks.end()) picks.push_back(n);
    }
    std::sort(picks.begin(), picks.end());
    return picks;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

void run_claim(Report& r, const CongruenceClaim& c, const std::string& prefix) {
    Int modulus = pow5(static_cast<unsigned long>(c.modulus_exp));
    Int guard = pow5(static_cast<unsigned long>(c.modulus_exp + kGuardDigits));
    long max_index = c.stride * c.n_max + c.offset;

    CountTable table = (c.target == TableKind::S) ? s_table(max_index, guard)
                                                  : g_table(max_index, guard);
    // g-route companion for the fg consistency check on s-claims
    CountTable g_companion{TableKind::G, -1, guard, {}};
    if (c.target == TableKind::S) {
        long g_max = (max_index - 1) / 6;
        g_companion = g_table(g_max, guard);
    }

    for (long n = 0; n <= c.n_max; ++n) {
        long idx = c.stride * n + c.offset;
        const Int& v = table.at(idx);
        if (v % modulus != 0)
            r.witness(prefix + "n=" + std::to_string(n),
                      "value " + v.get_str() + " mod " + modulus.get_str() + " = " +
                          Int(v % modulus).get_str());
        if (c.target == TableKind::S && idx % 6 == 1 &&
            v != g_companion.at((idx - 1) / 6))
            r.witness(prefix + "fg-route n=" + std::to_string(n),
                      "s=" + v.get_str() + " g=" + g_companion.at((idx - 1) / 6).get_str());
    }

    // exact-mode re-verification of a deterministic sample
    std::vector<long> spots = spot_indices(c);
    r.param(prefix + "spotIndices", join_longs(spots));
    if (!spots.empty()) {
        long exact_max = 0;
        for (long n : spots) {
            long idx = c.stride * n + c.offset;
            exact_max = std::max(exact_max,
                                 c.target == TableKind::S ? (idx - 1) / 6 : idx);
        }
        CountTable exact = g_table(exact_max);
        for (long n : spots) {
            long idx = c.stride * n + c.offset;
            const Int& value =
                exact.at(c.target == TableKind::S ? (idx - 1) / 6 : idx);
            if (value % modulus != 0)
                r.witness(prefix + "spot n=" + std::to_string(n),
                          "exact value " + value.get_str() + " not divisible");
            Int residue;
            mpz_fdiv_r(residue.get_mpz_t(), value.get_mpz_t(), guard.get_mpz_t());
            long table_idx = c.target == TableKind::S ? (idx - 1) / 6 : idx;
            const Int& modular = c.target == TableKind::S ? g_companion.at(table_idx)
                                                          : table.at(table_idx);
            if (residue != modular)
                r.witness(prefix + "spot-mode n=" + std::to_string(n),
                          "exact mod guard " + residue.get_str() + " != table " +
                              modular.get_str());
        }
    }
}

} // namespace

std::string CongruenceClaim::describe() const {
    std::ostringstream os;
    os << (target == TableKind::S ? 's' : 'g') << '(' << stride << "n+" << offset
       << ") mod 5^" << modulus_exp << ", n<=" << n_max;
    return os.str();
}

Report verify_claim(const CongruenceClaim& c) {
    if (c.modulus_exp < 1 || c.stride < 1 || c.offset < 0 || c.n_max < 0)
        throw std::invalid_argument("verify_claim: malformed claim");
    Report r;
    r.name = "claim-" + std::string(c.target == TableKind::S ? "s" : "g") + "-" +
             std::to_string(c.stride) + "n" + std::to_string(c.offset) + "-mod5e" +
             std::to_string(c.modulus_exp);
    ReportTimer timer(r);
    r.param("claim", c.describe());
    r.param("guardModulus", pow5(static_cast<unsigned long>(c.modulus_exp + kGuardDigits)));
    run_claim(r, c, "");
    return r;
}

Report main_theorem_reduction(int alpha, long n_max) {
    if (alpha < 1 || n_max < 0)
        throw std::invalid_argument("main_theorem_reduction: alpha >= 1, nMax >= 0");
    Report r;
    r.name = "main-reduction-" + std::to_string(alpha);
    ReportTimer timer(r);
    r.param("alpha", static_cast<long>(alpha));
    r.param("nMax", n_max);
    Int p = pow5(static_cast<unsigned long>(2 * alpha - 1));
    Int modulus = pow5(static_cast<unsigned long>(alpha));
    if (!p.fits_slong_p())
        throw PrecisionBudgetExceeded("main_theorem_reduction: stride exceeds table range");
    long p5 = p.get_si();
    long max_index = 2 * p5 * (3 * n_max + 2) + p5;
    CountTable s = s_table(max_index); // exact: the vanishing branches must be 0, not just 0 mod 5^a

    // g-offset (5^(2 alpha) - 1)/6 for the surviving branch
    Int off_num = pow5(static_cast<unsigned long>(2 * alpha)) - 1;
    Int off;
    mpz_divexact_ui(off.get_mpz_t(), off_num.get_mpz_t(), 6);
    long g_off = off.get_si();
    CountTable g = g_table(p5 * n_max + g_off);

    for (long n = 0; n <= n_max; ++n) {
        // branch 3n: index = 5^(2a-1)(6n+1), which is 2 mod 3
        long idx0 = 2 * p5 * (3 * n) + p5;
        if (s.at(idx0) != 0) r.witness("branch3n n=" + std::to_string(n), s.at(idx0));
        // branch 3n+1: index = 5^(2a-1)(6n+3), which is 0 mod 3
        long idx1 = 2 * p5 * (3 * n + 1) + p5;
        if (s.at(idx1) != 0) r.witness("branch3n+1 n=" + std::to_string(n), s.at(idx1));
        // branch 3n+2: index = 6*5^(2a-1) n + 5^(2a) = 6m+1 with m = 5^(2a-1) n + g_off
        long idx2 = 2 * p5 * (3 * n + 2) + p5;
        const Int& sv = s.at(idx2);
        if (sv % modulus != 0)
            r.witness("branch3n+2 n=" + std::to_string(n),
                      sv.get_str() + " mod " + modulus.get_str() + " = " +
                          Int(sv % modulus).get_str());
        if (sv != g.at(p5 * n + g_off))
            r.witness("branch3n+2 fg n=" + std::to_string(n),
                      "s=" + sv.get_str() + " g=" + g.at(p5 * n + g_off).get_str());
    }
    return r;
}

Report verify_phi_lemmas(long prec) {
    if (prec < 100) throw std::invalid_argument("verify_phi_lemmas: prec must be >= 100");
    Report r;
    r.name = "phi-lemmas";
    ReportTimer timer(r);
    r.param("prec", prec);
    // phi(-q) = phi(-q^25) - 2q M1(-q^5) + 2q^4 M2(-q^5)
    {
        LaurentSeries lhs = phi_neg(prec);
        LaurentSeries rhs = scale(phi_neg(ceil_div(prec + 24, 25)), 25);
        rhs = add(rhs, mul(shift(scale(triple_product_m(1, ceil_div(prec + 4, 5)), 5), 1),
                           Int(-2)));
        rhs = add(rhs, mul(shift(scale(triple_product_m(2, ceil_div(prec + 4, 5)), 5), 4),
                           Int(2)));
        for (long e = 0; e < prec; ++e)
            if (lhs.coeff(e) != rhs.coeff(e)) {
                r.witness("phi5 q^" + std::to_string(e),
                          lhs.coeff(e).get_str() + " != " + rhs.coeff(e).get_str());
                break;
            }
    }
    // 4q M1(-q) M2(-q) = phi(-q^5)^2 - phi(-q)^2
    {
        LaurentSeries lhs =
            mul(shift(mul(triple_product_m(1, prec), triple_product_m(2, prec)), 1), Int(4));
        LaurentSeries phi5 = scale(phi_neg(ceil_div(prec + 4, 5)), 5);
        LaurentSeries rhs = sub(pow(phi5, 2), pow(phi_neg(prec), 2));
        for (long e = 0; e < prec; ++e)
            if (lhs.coeff(e) != rhs.coeff(e)) {
                r.witness("m1m2 q^" + std::to_string(e),
                          lhs.coeff(e).get_str() + " != " + rhs.coeff(e).get_str());
                break;
            }
    }
    return r;
}

Report verify_x_phi_mod5(long prec) {
    if (prec < 100) throw std::invalid_argument("verify_x_phi_mod5: prec must be >= 100");
    Report r;
    r.name = "x-phi-mod5";
    ReportTimer timer(r);
    r.param("prec", prec);
    LaurentSeries diff = sub(expand(x_spec(), prec), pow(phi_neg(prec), 8));
    LaurentSeries reduced = reduce_mod(diff, 5);
    if (!reduced.is_zero())
        r.witness(reduced.min_exp(), reduced.coeff(reduced.min_exp()));
    return r;
}

Report verify_phi_progressions(long prec) {
    Report r;
    r.name = "phi-progressions";
    ReportTimer timer(r);
    r.param("prec", prec);
    LaurentSeries phi = phi_neg(prec);
    for (long e = 0; e < prec; ++e) {
        if (phi.coeff(e) == 0) continue;
        if (e % 5 == 2 || e % 5 == 3) r.witness(e, phi.coeff(e));
    }
    return r;
}

namespace {

Report run_family(const char* name, const std::vector<CongruenceClaim>& claims) {
    Report r;
    r.name = name;
    ReportTimer timer(r);
    for (const auto& c : claims) {
        std::string prefix = c.describe() + " ";
        r.param(c.describe(), "guard 5^" + std::to_string(c.modulus_exp + kGuardDigits));
        run_claim(r, c, prefix);
    }
    return r;
}

} // namespace

Report verify_family_125(long n_max) {
    return run_family("family-125",
                      {{TableKind::G, 3, 625, 229, n_max},
                       {TableKind::G, 3, 625, 604, n_max},
                       {TableKind::S, 3, 1250, 125, n_max},
                       {TableKind::S, 3, 1250, 1125, n_max}});
}

Report verify_family_625(long n_max) {
    return run_family("family-625",
                      {{TableKind::G, 4, 15625, 8854, n_max},
                       {TableKind::G, 4, 15625, 11979, n_max},
                       {TableKind::S, 4, 31250, 9375, n_max},
                       {TableKind::S, 4, 31250, 21875, n_max}});
}

} // namespace tspp5
