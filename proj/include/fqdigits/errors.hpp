#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqdigits {

// Common base for every domain error thrown by this library. Callers that only
// care about "something was rejected" can catch this; tests catch the concrete
// types below.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct MissingModulus : Error { using Error::Error; };
struct OrderOverflow : Error { using Error::Error; };
struct CtxMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// poly
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};
struct CoefficientOutOfField : Error { using Error::Error; };
struct DivisionByZeroPoly : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ModulusConstant : Error { using Error::Error; };
struct ConstantInput : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };

// order
struct NotCoprime : Error { using Error::Error; };
struct ConstantModulus : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// digits
struct ConstantBase : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct PeriodDivisibleByCharacteristic : Error { using Error::Error; };

// a checked identity failed while sweeping; message names the offending modulus
struct VerificationFailure : Error { using Error::Error; };

// intside
struct NotPrime : Error { using Error::Error; };
struct WrongResidueClass : Error { using Error::Error; };

}  // namespace fqdigits
