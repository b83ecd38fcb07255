#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"

namespace tspp5 {

// One factor E(q^t)^e of an eta quotient, with E(q) = (q;q)_inf.
struct EtaFactor {
    long scale;
    long exponent;
};

// Symbolic eta quotient q^q_prefix * prod E(q^t)^e. The eta weights q^(1/24)
// are already cancelled into the integer prefix, so no fractional exponents
// exist anywhere in the library.
struct EtaQuotientSpec {
    long q_prefix = 0;
    std::vector<EtaFactor> factors; // distinct scales ascending, exponents nonzero

    void validate() const; // throws std::invalid_argument on a malformed spec
    std::string to_json() const; // {"qPrefix":..,"factors":[{"t":..,"e":..}]}
};

// E(q) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}, built sparsely from the pentagonal
// numbers; never as an O(prec^2) product.
LaurentSeries euler_product(long prec);

// q^q_prefix * prod E(q^t)^e expanded exactly to prec.
LaurentSeries expand(const EtaQuotientSpec& spec, long prec);

// phi(-q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2}. Both closed forms (theta sum and
// E(q)^2/E(q^2)) are computed and cross-asserted; a mismatch means a bug in
// scale/pow and raises InternalIdentityFailure.
LaurentSeries phi_neg(long prec);

// M1(-q) = (q^3,q^7,q^10;q^10)_inf, M2(-q) = (q,q^9,q^10;q^10)_inf as finite
// products of sparse binomial factors.
LaurentSeries triple_product_m(int which, long prec);

// Built-in quotients from the underlying theory.
const EtaQuotientSpec& xi_spec();      // q^-4 E(q^2)^3 E(q^25)^2 / (E(q)^2 E(q^50)^3), level 50
const EtaQuotientSpec& x_spec();       // E(q^2)^2 E(q^5)^4 / (E(q)^4 E(q^10)^2), level 10
const EtaQuotientSpec& g_spec();       // E(q^2)^3 / E(q)^2
const EtaQuotientSpec& phi_neg_spec(); // E(q)^2 / E(q^2)

// Resolve "xi", "X", "g", "phi-neg", "M1", "M2" to an expansion.
LaurentSeries named_series(std::string_view name, long prec);

} // namespace tspp5
