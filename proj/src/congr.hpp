#pragma once

#include "dseq.hpp"
#include "partitions.hpp"

namespace tspp5 {

// target(stride*n + offset) == 0 (mod 5^modulus_exp) for 0 <= n <= n_max.
struct CongruenceClaim {
    TableKind target;
    int modulus_exp;
    long stride;
    long offset;
    long n_max;

    std::string describe() const; // "s(10n+5) mod 5^1, n<=2000"
};

// Sweeps the claim in a mod-5^(k+2) table (two guard digits), cross-checks
// s-values against the g-route where s(6n+1)=g(n) applies, and re-verifies
// ten deterministic pseudo-random indices in exact mode.
Report verify_claim(const CongruenceClaim& c);

// The three residue branches of the main congruence: branches 3n and 3n+1
// vanish as exact integer zeros (mod-3 rule), branch 3n+2 reduces to the
// g-subsequence and is swept mod 5^alpha with an exact fg cross-check.
Report main_theorem_reduction(int alpha, long n_max);

// phi(-q) = phi(-q^25) - 2q M1(-q^5) + 2q^4 M2(-q^5), and
// 4q M1(-q) M2(-q) = phi(-q^5)^2 - phi(-q)^2, coefficientwise to prec.
Report verify_phi_lemmas(long prec);

// X == phi(-q)^8 (mod 5), coefficientwise to prec.
Report verify_x_phi_mod5(long prec);

// phi(-q) has no exponents that are 2 or 3 mod 5, checked to prec.
Report verify_phi_progressions(long prec);

// g(625n+229), g(625n+604), s(1250n+125), s(1250n+1125), all mod 125.
Report verify_family_125(long n_max);

// g(15625n+8854), g(15625n+11979), s(31250n+9375), s(31250n+21875), mod 625.
Report verify_family_625(long n_max);

} // namespace tspp5
