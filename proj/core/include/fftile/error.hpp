#pragma once

#include <stdexcept>
#include <string>

namespace fftile {

/// Failure categories surfaced by the library.
///
/// Precondition violations and malformed inputs map onto the specific
/// kinds below; InternalContradiction is reserved for situations the
/// underlying theory rules out (a structure theorem failing on inputs
/// that satisfy its hypotheses) and always indicates a bug.
enum class ErrorKind {
    NotPrime,
    EvenModulus,
    ModulusMismatch,
    DimensionMismatch,
    ZeroInverse,
    ZeroGaloisIndex,
    ZeroDirection,
    ZeroBase,
    ZeroRadius,
    ZeroDistance,
    BadResidue,
    BadIndex,
    EmptySet,
    NonRationalResult,
    UnsupportedSize,
    UnsupportedDim,
    IncompleteDomain,
    NotATiling,
    BudgetExceeded,
    ParseError,
    BadManifest,
    InternalContradiction,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fftile
