#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    NonSquareError() : Error("matrix is not square") {}
};

struct SingularMatrixError : Error {
    SingularMatrixError() : Error("matrix is singular") {}
};

struct BothZeroError : Error {
    BothZeroError() : Error("gcd of two zero polynomials") {}
};

struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

struct NotSquarefreeError : Error {
    NotSquarefreeError() : Error("polynomial is not squarefree") {}
};

struct NotControllableError : Error {
    NotControllableError() : Error("pair (A, B) is not completely controllable") {}
};

struct InconsistentSystemError : Error {
    InconsistentSystemError() : Error("linear system unexpectedly inconsistent") {}
};

struct NonFiniteError : Error {
    NonFiniteError() : Error("trajectory left the finite range") {}
};

struct SingularWitnessError : Error {
    SingularWitnessError() : Error("witness matrices O and Q must be invertible") {}
};

// Thrown when the imaginary-axis factor of a polynomial exists only with
// irrational coefficients and therefore cannot be returned exactly.
struct AxisFactorError : Error {
    AxisFactorError() : Error("imaginary-axis factor has no exact rational representation") {}
};

}  // namespace lcs
