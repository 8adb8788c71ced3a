#pragma once

#include <stdexcept>
#include <string>

namespace mspoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMonomial : Error {
    using Error::Error;
};
struct NegativePowerOfNonUnit : Error {
    using Error::Error;
};
struct NonInvertibleSubstitution : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct CompositionCaseViolation : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct CaseViolation : Error {
    using Error::Error;
};
struct UnsupportedTerm : Error {
    using Error::Error;
};
struct NotRegular : Error {
    using Error::Error;
};
struct DomainViolation : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace mspoly
