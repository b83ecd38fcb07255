#pragma once

#include <vector>

#include "laurent.hpp"
#include "report.hpp"

namespace tspp5 {

enum class TableKind { S, G };

// Table of counting-function values. values[n] is s(n) or g(n); when modulus
// is nonzero every value is the canonical representative mod that modulus.
struct CountTable {
    TableKind kind;
    long up_to;
    Int modulus; // 0 = exact
    std::vector<Int> values;

    const Int& at(long n) const;
};

// s(n): number of 1-shell totally symmetric plane partitions of n, from the
// generating function 1 + sum_{n>=1} q^{3n-2} prod_{i=0}^{n-2} (1+q^{6i+3}).
// The outer sum is walked once with an incrementally updated product.
CountTable s_table(long up_to, const Int& modulus = 0);

// g(n): coefficients of E(q^2)^3 / E(q)^2. Uses the sparse pentagonal
// recurrence for E(q)^{-1} twice, then the sparse cube E(q^2)^3, so both the
// exact and the mod-5^k mode run in O(n^1.5).
CountTable g_table(long up_to, const Int& modulus = 0);

// s(6n+1) = g(n) for every representable n; the first mismatch is reported.
Report check_fg(const CountTable& s, const CountTable& g);
Report check_fg(long up_to);

// s(n) = 0 for n >= 1 with n == 0,2 (mod 3), as exact integer zeros.
Report check_mod3_vanishing(const CountTable& s);
Report check_mod3_vanishing(long up_to);

} // namespace tspp5
