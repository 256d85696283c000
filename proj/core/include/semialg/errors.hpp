#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semialg {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A polynomial was evaluated with an assignment that misses a variable.
struct EvalError : Error {
    using Error::Error;
};

// Bad input to gf-linalg (non-prime modulus, zero inverse, oversized
// enumeration).
struct LinalgError : Error {
    enum class Kind { NonPrimeModulus, ZeroInverse, TooLarge };
    Kind kind;
    LinalgError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// Bad input to an encoder operation.
struct EncodeError : Error {
    enum class Kind { EmptySupport, MissingZAxioms };
    Kind kind;
    EncodeError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// Proof rejected by the kernel checker.
struct CheckError : Error {
    enum class Kind {
        BadReference,
        NegativeScalar,
        PolyMismatch,
        FlavorMixing,
        BadHypIndex,
        BadStructure,
        UniverseTooLarge,
    };
    Kind kind;
    std::size_t line;  // offending line id; npos for header-level faults
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    CheckError(Kind k, std::size_t line_id, const std::string& what)
        : Error(what), kind(k), line(line_id) {}
};

// A derivation builder was invoked outside its precondition, or an internal
// identity it relies on failed. Builders never emit a bad line silently.
struct BuildError : Error {
    enum class Kind {
        NegativeConstant,
        NoVariables,
        DecompositionMismatch,
        NonIntegerInput,
        WrongParity,
        NotViolating,
        InvalidCertificate,
        Precondition,
    };
    Kind kind;
    BuildError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// Text input could not be parsed (system files, proof files, poly strings).
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t ln, std::size_t col, const std::string& why)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + why),
          line(ln),
          column(col) {}
};

}  // namespace semialg
