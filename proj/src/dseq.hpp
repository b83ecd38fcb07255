#pragma once

#include <map>

#include "partitions.hpp"
#include "ubasis.hpp"

namespace tspp5 {

// Coefficient vector of D_alpha in the X-power basis: D_alpha = sum d_alpha(j) X^j.
// D_1 = U(xi), then U and multiplication by xi alternate.
struct DSequence {
    long alpha = 1;
    std::map<long, Int> entries; // j -> d_alpha(j), finitely supported

    Int entry(long j) const;
    long max_support() const;
    std::string to_json() const; // {"alpha":..,"entries":{"j":"v"}}
};

// d_1 = (5, 0, 0, ...).
DSequence d_initial();

// d_{alpha+1}(j) = sum_k m(k,j) d_alpha(k), with m = A when alpha+1 is even
// and m = B when alpha+1 is odd. Needs rows for every k in the support.
DSequence d_next(const DSequence& d, const CoeffMatrix& a, const CoeffMatrix& b);

// Two steps at once through t(i,j) = sum_k a(i,k) b(k,j); must equal
// d_next(d_next(.)) and only applies to odd-indexed sequences.
DSequence d_via_t(const DSequence& d_odd, const CoeffMatrix& t);

// Chain from d_1 with matrices extended on demand (via_t routes the odd
// steps through the T matrix).
DSequence d_sequence(long alpha, bool via_t = false);

// D_alpha computed purely by series operations (U5 and multiplication by xi),
// never via the matrices; this is the independent route of Theorem th:d.
// Base series need about 5^alpha * prec terms; alpha is capped at 5.
LaurentSeries d_series_direct(long alpha, long prec,
                              long budget = kDefaultPrecisionBudget);

// Series route == matrix route at the given precision.
Report verify_thd(long alpha, long prec);

// d_3 and d_5 entries against their printed exact values and residues.
Report verify_paper_d();

// The two subsequence identities: for the odd one,
//   sum_n g(5^{2a-1} n + (5^{2a}-1)/6) q^n = E(q^10)^3/E(q^5)^2 * D_{2a-1},
// and the even companion with E(q^2)^3/E(q)^2 * D_{2a}.
Report verify_thgd(long alpha, long prec);

} // namespace tspp5
