#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "etaq.hpp"
#include "report.hpp"

namespace tspp5 {

enum class MatrixKind { A, B, T };

using SparseRow = std::map<long, Int>;

// Row-finite sparse matrix of exact integers, rows indexed from 1.
struct CoeffMatrix {
    MatrixKind kind;
    std::vector<SparseRow> rows;

    long row_count() const { return static_cast<long>(rows.size()); }
    const SparseRow& row(long i) const; // throws MissingPriorRows
    Int entry(long i, long j) const;    // 0 for entries absent from a row
    std::string to_json() const;        // {"kind":..,"rows":[{"i":..,"entries":{"j":"v"}}]}
};

// Appendix entry in the paper's compressed notation: sign * m * 5^e.
struct WCoded {
    int sign;
    unsigned e;
    unsigned long m;
};
Int w_decode(const WCoded& w);

// The tabulated first five rows of both matrices.
std::pair<CoeffMatrix, CoeffMatrix> appendix_rows();

// The shared 15-term recurrence: row(i) = sum of coeff * row(i - row_back)
// shifted right by col_back. The taps are the sigma-polynomial coefficients
// with alternating signs.
struct RecurrenceTap {
    long row_back;
    long col_back;
    long coeff;
};
const std::vector<RecurrenceTap>& recurrence_taps();

constexpr long kDefaultPrecisionBudget = 500000;

// Shares the expensive base expansions (X and xi at ~5*prec terms) across a
// batch of U-images and X-basis decompositions. Not thread-safe; build one
// per thread.
class UContext {
public:
    explicit UContext(long prec, long budget = kDefaultPrecisionBudget);

    long prec() const { return prec_; }
    const LaurentSeries& x_at_prec() const { return x_at_prec_; }

    LaurentSeries u_x_power(long i);    // U5(X^i), exact to prec
    LaurentSeries u_xi_x_power(long i); // U5(xi * X^i), exact to prec

    // Finds c_j with F = sum_{j=1}^{max_j} c_j X^j exactly on the window.
    // Greedy elimination in Y = X-1 (order exactly 1, leading coefficient 4),
    // then binomial conversion back to the X basis; the converted polynomial
    // must have zero constant term and the residual series must vanish.
    SparseRow decompose(const LaurentSeries& F, long max_j);

    // Same, but max_j is searched upward from start_j. The paper states no
    // support bounds for the matrix rows, so inferred bounds are only a
    // starting point, never trusted.
    SparseRow decompose_grow(const LaurentSeries& F, long start_j, long cap_j);

private:
    const LaurentSeries& x_power(long i);
    const LaurentSeries& y_power(long k);

    long prec_;
    long base_prec_;
    LaurentSeries xi_;
    LaurentSeries x_at_prec_;
    std::vector<LaurentSeries> x_powers_; // x_powers_[i] = X^i at base precision
    std::vector<LaurentSeries> y_powers_; // y_powers_[k] = (X-1)^k at prec
};

LaurentSeries u_of_x_power(long i, long prec, long budget = kDefaultPrecisionBudget);
LaurentSeries u_of_xi_x_power(long i, long prec, long budget = kDefaultPrecisionBudget);
SparseRow x_basis_decompose(const LaurentSeries& F, long max_j, long prec);

// Rows 1..5 of (a_{i,j}) and (b_{i,j}) by decomposing U(X^i) and U(xi X^i).
std::pair<CoeffMatrix, CoeffMatrix> compute_base_rows(long prec = 450);

// Row i (i >= 6) from the recurrence; rows i-5..i-1 must be materialized.
SparseRow extend_row(const CoeffMatrix& m, long i);
void extend_to(CoeffMatrix& m, long rows);

// t(i,j) = sum_k a(i,k) b(k,j); the sum is finite because row i of A is.
CoeffMatrix t_matrix(const CoeffMatrix& a, const CoeffMatrix& b, long i_max);

// sigma_1..sigma_5 as X-polynomials from Newton's identities applied to the
// power sums p_i = 5 U(X^i); every division must come out exact.
std::array<SparseRow, 5> newton_sigmas(long prec = 450);

Report verify_appendix(long prec = 450);   // computed base rows == appendix, entry for entry
Report verify_sigmas(long prec = 450);     // Newton sigmas == their known closed forms
Report verify_recurrence(long i_lo = 6, long i_hi = 7, long prec = 450);

} // namespace tspp5
