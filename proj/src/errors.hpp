#pragma once

#include <stdexcept>
#include <string>

namespace tspp5 {

// Common base so the C API can map every domain failure to a status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested coefficient lies at or beyond the tracked precision window.
class PrecisionExceeded : public Error {
public:
    using Error::Error;
};

// invert()/pow() need the lowest nonzero coefficient to be +1 or -1.
class NonUnitLeadingCoefficient : public Error {
public:
    using Error::Error;
};

// X-basis decomposition left a nonzero residual (wrong maxJ, insufficient
// precision, or genuine non-membership).
class DecompositionResidual : public Error {
public:
    using Error::Error;
};

// Matrix/sequence recurrences need earlier rows that were never materialized.
class MissingPriorRows : public Error {
public:
    using Error::Error;
};

// A division inside Newton's identities came out inexact.
class NonIntegralNewtonStep : public Error {
public:
    using Error::Error;
};

// Two closed forms of the same series disagree; signals an arithmetic bug.
class InternalIdentityFailure : public Error {
public:
    using Error::Error;
};

// A computation would need base series longer than the configured budget.
class PrecisionBudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace tspp5
