#pragma once

#include "dseq.hpp"
#include "report.hpp"
#include "ubasis.hpp"

namespace tspp5 {

// 5-adic order with the convention pi(0) = infinity.
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation finite(long v) { return {false, v}; }
    bool at_least(long bound) const { return infinite || value >= bound; }
    bool operator==(const Valuation&) const = default;
};

Valuation val5(const Int& n);

// Floor bounds from the valuation theory; floor rounds toward -infinity for
// negative arguments. Unmaterialized entries pass vacuously via pi(0) = inf.
// Each report lists the minimal-slack entry per row.
Report check_bound_a(const CoeffMatrix& a, long i_max, long j_max); // pi >= floor((5j-i-1)/6)
Report check_bound_b(const CoeffMatrix& b, long i_max, long j_max); // pi >= floor((5j-i+2)/6)

// pi(t(i,j)) >= min over k in A's row-i support of
//   floor((5k-i-1)/6) + floor((5j-k+2)/6).
Report check_bound_t(const CoeffMatrix& t, const CoeffMatrix& a, long i_max, long j_max);

// pi(d_{2a-1}(j)) >= a + floor((5j-5)/6) for the supplied odd-index sequences.
// j_max of 0 means sweep each sequence's own support.
Report check_bound_d(const std::vector<DSequence>& ds, long j_max = 0);

} // namespace tspp5
