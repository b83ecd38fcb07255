#include "laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tspp5 {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

LaurentSeries::LaurentSeries(long min_exp, std::vector<Int> coeffs, long prec)
    : min_exp_(min_exp), prec_(prec), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != prec_ - min_exp_)
        throw std::invalid_argument("LaurentSeries: coeffs length must equal prec - minExp");
    canonicalize();
}

void LaurentSeries::canonicalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = prec_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<long>(lead);
    }
}

LaurentSeries LaurentSeries::zero(long prec) {
    return LaurentSeries(prec, {}, prec);
}

LaurentSeries LaurentSeries::constant(Int c, long prec) {
    return monomial(std::move(c), 0, prec);
}

LaurentSeries LaurentSeries::monomial(Int c, long exp, long prec) {
    if (exp >= prec) return zero(prec);
    std::vector<Int> v(prec - exp);
    v[0] = std::move(c);
    return LaurentSeries(exp, std::move(v), prec);
}

const Int& LaurentSeries::coeff(long n) const {
    static const Int kZero = 0;
    if (n >= prec_)
        throw PrecisionExceeded("coefficient of q^" + std::to_string(n) +
                                " requested but precision is " + std::to_string(prec_));
    if (n < min_exp_) return kZero;
    return coeffs_[n - min_exp_];
}

std::string LaurentSeries::to_json() const {
    std::ostringstream os;
    os << "{\"minExp\":" << min_exp_ << ",\"prec\":" << prec_ << ",\"coeffs\":[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ',';
        os << '"' << coeffs_[k].get_str() << '"';
    }
    os << "]}";
    return os.str();
}

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
    long prec = std::min(f.prec(), g.prec());
    long me = std::min({f.min_exp(), g.min_exp(), prec});
    std::vector<Int> out(prec - me);
    for (const LaurentSeries* s : {&f, &g}) {
        const auto& c = s->coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            long e = s->min_exp() + static_cast<long>(k);
            if (e >= prec) break;
            out[e - me] += c[k];
        }
    }
    return LaurentSeries(me, std::move(out), prec);
}

LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) {
    return add(f, neg(g));
}

LaurentSeries neg(const LaurentSeries& f) {
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -f.coeffs()[k];
    return LaurentSeries(f.min_exp(), std::move(out), f.prec());
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
    // (f*g).prec = min(f.prec + g.minExp, g.prec + f.minExp): beyond that the
    // Cauchy sum would need coefficients outside a factor's window.
    long prec = std::min(f.prec() + g.min_exp(), g.prec() + f.min_exp());
    long me = std::min(f.min_exp() + g.min_exp(), prec);
    std::vector<Int> out(prec - me);
    if (!f.is_zero() && !g.is_zero()) {
        // Schoolbook product; skips zero coefficients of the outer factor,
        // which keeps sparse inputs (pentagonal-type) cheap.
        const auto& a = f.coeffs();
        const auto& b = g.coeffs();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            long e1 = f.min_exp() + static_cast<long>(i) + g.min_exp();
            if (e1 >= prec) break; // every later product exponent is out of window
            std::size_t jmax = b.size();
            if (e1 + static_cast<long>(jmax) > prec)
                jmax = static_cast<std::size_t>(prec - e1);
            const mpz_srcptr ai = a[i].get_mpz_t();
            for (std::size_t j = 0; j < jmax; ++j) {
                if (b[j] == 0) continue;
                mpz_addmul(out[e1 + static_cast<long>(j) - me].get_mpz_t(), ai,
                           b[j].get_mpz_t());
            }
        }
    }
    return LaurentSeries(me, std::move(out), prec);
}

LaurentSeries mul(const LaurentSeries& f, const Int& c) {
    if (c == 0) return LaurentSeries::zero(f.prec());
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.coeffs()[k] * c;
    return LaurentSeries(f.min_exp(), std::move(out), f.prec());
}

LaurentSeries shift(const LaurentSeries& f, long d) {
    return LaurentSeries(f.min_exp() + d, f.coeffs(), f.prec() + d);
}

LaurentSeries invert(const LaurentSeries& f) {
    if (f.is_zero() || (f.coeffs()[0] != 1 && f.coeffs()[0] != -1))
        throw NonUnitLeadingCoefficient("invert: lowest nonzero coefficient must be +1 or -1");
    const long m = f.min_exp();
    const long n = f.prec() - m; // known relative coefficients
    const bool negated = f.coeffs()[0] == -1;
    // f = u q^m (1 + h); compute (1+h)^{-1} by the standard recurrence.
    std::vector<Int> inv(n);
    inv[0] = 1;
    for (long k = 1; k < n; ++k) {
        Int acc = 0;
        long jmax = std::min<long>(k, static_cast<long>(f.coeffs().size()) - 1);
        for (long j = 1; j <= jmax; ++j) {
            if (f.coeffs()[j] == 0) continue;
            if (negated)
                mpz_submul(acc.get_mpz_t(), f.coeffs()[j].get_mpz_t(), inv[k - j].get_mpz_t());
            else
                mpz_addmul(acc.get_mpz_t(), f.coeffs()[j].get_mpz_t(), inv[k - j].get_mpz_t());
        }
        inv[k] = -acc;
    }
    if (negated)
        for (auto& c : inv) c = -c;
    return LaurentSeries(-m, std::move(inv), n - m);
}

LaurentSeries pow(const LaurentSeries& f, long k) {
    if (k < 0) return pow(invert(f), -k);
    LaurentSeries result = LaurentSeries::constant(1, f.prec() - f.min_exp());
    LaurentSeries base = f;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

LaurentSeries scale(const LaurentSeries& f, long t) {
    if (t < 1) throw std::invalid_argument("scale: t must be positive");
    long prec = t * f.prec() - (t - 1);
    long me = std::min(t * f.min_exp(), prec);
    std::vector<Int> out(prec - me);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        out[t * (f.min_exp() + static_cast<long>(k)) - me] = f.coeffs()[k];
    return LaurentSeries(me, std::move(out), prec);
}

LaurentSeries extract_progression(const LaurentSeries& f, long r, long m) {
    if (m < 1 || r < 0 || r >= m)
        throw std::invalid_argument("extract_progression: need m >= 1 and r in [0, m)");
    long prec = floor_div(f.prec() - 1 - r, m) + 1;
    long me = std::min(ceil_div(f.min_exp() - r, m), prec);
    std::vector<Int> out(prec - me);
    for (long n = me; n < prec; ++n) {
        long e = m * n + r;
        if (e >= f.min_exp()) out[n - me] = f.coeff(e);
    }
    return LaurentSeries(me, std::move(out), prec);
}

LaurentSeries reduce_mod(const LaurentSeries& f, const Int& m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        mpz_fdiv_r(out[k].get_mpz_t(), f.coeffs()[k].get_mpz_t(), m.get_mpz_t());
    return LaurentSeries(f.min_exp(), std::move(out), f.prec());
}

LaurentSeries truncate(const LaurentSeries& f, long new_prec) {
    if (new_prec > f.prec())
        throw std::invalid_argument("truncate: windows never widen");
    if (new_prec <= f.min_exp()) return LaurentSeries::zero(new_prec);
    std::vector<Int> out(f.coeffs().begin(), f.coeffs().begin() + (new_prec - f.min_exp()));
    return LaurentSeries(f.min_exp(), std::move(out), new_prec);
}

bool equal_on_window(const LaurentSeries& f, const LaurentSeries& g) {
    long lo = std::min(f.min_exp(), g.min_exp());
    long hi = std::min(f.prec(), g.prec());
    for (long e = lo; e < hi; ++e)
        if (f.coeff(e) != g.coeff(e)) return false;
    return true;
}

} // namespace tspp5
