#include "etaq.hpp"

#include <algorithm>
#include <sstream>

namespace tspp5 {

void EtaQuotientSpec::validate() const {
    long prev = 0;
    for (const auto& f : factors) {
        if (f.scale <= prev)
            throw std::invalid_argument("EtaQuotientSpec: scales must be distinct and ascending");
        if (f.exponent == 0)
            throw std::invalid_argument("EtaQuotientSpec: exponents must be nonzero");
        prev = f.scale;
    }
}

std::string EtaQuotientSpec::to_json() const {
    std::ostringstream os;
    os << "{\"qPrefix\":" << q_prefix << ",\"factors\":[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ',';
        os << "{\"t\":" << factors[i].scale << ",\"e\":" << factors[i].exponent << '}';
    }
    os << "]}";
    return os.str();
}

LaurentSeries euler_product(long prec) {
    if (prec < 1) throw std::invalid_argument("euler_product: prec must be >= 1");
    std::vector<Int> out(prec);
    for (long k = 0;; ++k) {
        // generalized pentagonal exponents k(3k-1)/2 and k(3k+1)/2
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= prec && e2 >= prec) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (e1 < prec) out[e1] += sign;
        if (k > 0 && e2 < prec) out[e2] += sign;
    }
    return LaurentSeries(0, std::move(out), prec);
}

LaurentSeries expand(const EtaQuotientSpec& spec, long prec) {
    spec.validate();
    if (prec <= spec.q_prefix)
        throw std::invalid_argument("expand: prec must exceed the q prefix");
    long target = prec - spec.q_prefix;
    LaurentSeries result = LaurentSeries::constant(1, target);
    for (const auto& f : spec.factors) {
        // scale() turns euler prec p into t*p-(t-1); pick the smallest p
        // reaching the target window.
        long p = ceil_div(target + f.scale - 1, f.scale);
        LaurentSeries factor = pow(scale(euler_product(p), f.scale), f.exponent);
        result = mul(result, factor);
    }
    return shift(result, spec.q_prefix);
}

LaurentSeries phi_neg(long prec) {
    if (prec < 1) throw std::invalid_argument("phi_neg: prec must be >= 1");
    std::vector<Int> out(prec);
    out[0] = 1;
    for (long n = 1; n * n < prec; ++n)
        out[n * n] = (n % 2 == 0) ? 2 : -2;
    LaurentSeries theta(0, std::move(out), prec);
    if (!equal_on_window(theta, expand(phi_neg_spec(), prec)))
        throw InternalIdentityFailure("phi_neg: theta sum and E(q)^2/E(q^2) disagree");
    return theta;
}

LaurentSeries triple_product_m(int which, long prec) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("triple_product_m: which must be 1 or 2");
    if (prec < 1) throw std::invalid_argument("triple_product_m: prec must be >= 1");
    const long offs[3] = {which == 1 ? 3L : 1L, which == 1 ? 7L : 9L, 10L};
    std::vector<long> exps;
    for (long o : offs)
        for (long e = o; e < prec; e += 10) exps.push_back(e);
    std::sort(exps.begin(), exps.end());
    // multiply the (1 - q^e) factors in place, largest index first
    std::vector<Int> out(prec);
    out[0] = 1;
    for (long e : exps)
        for (long k = prec - 1; k >= e; --k)
            if (out[k - e] != 0) out[k] -= out[k - e];
    return LaurentSeries(0, std::move(out), prec);
}

const EtaQuotientSpec& xi_spec() {
    static const EtaQuotientSpec spec{-4, {{1, -2}, {2, 3}, {25, 2}, {50, -3}}};
    return spec;
}

const EtaQuotientSpec& x_spec() {
    static const EtaQuotientSpec spec{0, {{1, -4}, {2, 2}, {5, 4}, {10, -2}}};
    return spec;
}

const EtaQuotientSpec& g_spec() {
    static const EtaQuotientSpec spec{0, {{1, -2}, {2, 3}}};
    return spec;
}

const EtaQuotientSpec& phi_neg_spec() {
    static const EtaQuotientSpec spec{0, {{1, 2}, {2, -1}}};
    return spec;
}

LaurentSeries named_series(std::string_view name, long prec) {
    if (name == "xi") return expand(xi_spec(), prec);
    if (name == "X") return expand(x_spec(), prec);
    if (name == "g") return expand(g_spec(), prec);
    if (name == "phi-neg") return phi_neg(prec);
    if (name == "M1") return triple_product_m(1, prec);
    if (name == "M2") return triple_product_m(2, prec);
    throw std::invalid_argument("unknown series name: " + std::string(name));
}

} // namespace tspp5
