#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "errors.hpp"

namespace tspp5 {

using Int = mpz_class;

// Division rounding toward -infinity / +infinity (q-exponent window math).
long floor_div(long a, long b);
long ceil_div(long a, long b);

// Truncated Laurent series with exact integer coefficients.
//
// coeffs[k] is the coefficient of q^(min_exp + k); coefficients are meaningful
// exactly for exponents < prec. A series that is identically zero on its
// window is stored canonically with empty coeffs and min_exp == prec, which
// makes equality testing structural. Leading zero coefficients are always
// trimmed, so min_exp is the true order of a nonzero series.
//
// Values are immutable after construction; all operations are pure functions.
class LaurentSeries {
public:
    LaurentSeries() : min_exp_(0), prec_(0) {}
    LaurentSeries(long min_exp, std::vector<Int> coeffs, long prec);

    static LaurentSeries zero(long prec);
    static LaurentSeries constant(Int c, long prec);
    static LaurentSeries monomial(Int c, long exp, long prec);

    long min_exp() const { return min_exp_; }
    long prec() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of q^n: zero below min_exp, PrecisionExceeded for n >= prec.
    const Int& coeff(long n) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const LaurentSeries& o) const = default;

    std::string to_json() const; // {"minExp":..,"prec":..,"coeffs":["..",..]}

private:
    void canonicalize();

    long min_exp_;
    long prec_;
    std::vector<Int> coeffs_;
};

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries neg(const LaurentSeries& f);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries mul(const LaurentSeries& f, const Int& c);

// f * q^d (window shifts with the exponents).
LaurentSeries shift(const LaurentSeries& f, long d);

// Multiplicative inverse; the lowest nonzero coefficient must be +1 or -1.
LaurentSeries invert(const LaurentSeries& f);

// f^k by repeated squaring; k < 0 goes through invert().
LaurentSeries pow(const LaurentSeries& f, long k);

// q -> q^t substitution; prec becomes t*prec - (t-1) so every derived
// coefficient is backed by a known source coefficient.
LaurentSeries scale(const LaurentSeries& f, long t);

// Sum of a_{mn+r} q^n over all n with mn+r inside f's window.
// The Atkin U_5 operator is extract_progression(f, 0, 5).
LaurentSeries extract_progression(const LaurentSeries& f, long r, long m);

// Every coefficient reduced to the canonical representative in [0, m), m >= 2.
LaurentSeries reduce_mod(const LaurentSeries& f, const Int& m);

// Narrow the window; new_prec must not exceed f.prec (windows never widen).
LaurentSeries truncate(const LaurentSeries& f, long new_prec);

// True when f and g agree coefficientwise on [min(min_exp), min(prec)).
bool equal_on_window(const LaurentSeries& f, const LaurentSeries& g);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return sub(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return neg(f); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }
inline LaurentSeries operator*(const LaurentSeries& f, const Int& c) { return mul(f, c); }
inline LaurentSeries operator*(const Int& c, const LaurentSeries& f) { return mul(f, c); }

} // namespace tspp5
