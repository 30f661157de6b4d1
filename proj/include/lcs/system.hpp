#pragma once

#include "lcs/matrix.hpp"

namespace lcs {

// Time-invariant linear controlled system xdot = A x + B u. m == 0 is allowed
// and models a plain ODE (B is n x 0).
struct ControlSystem {
    int n = 0;
    int m = 0;
    RationalMatrix A;  // n x n
    RationalMatrix B;  // n x m

    ControlSystem() = default;
    ControlSystem(RationalMatrix a, RationalMatrix b) : A(std::move(a)), B(std::move(b)) {
        if (!A.is_square()) throw NonSquareError();
        if (B.rows() != A.rows()) throw Error("B must have as many rows as A");
        if (A.rows() < 1) throw Error("state dimension must be at least 1");
        n = A.rows();
        m = B.cols();
    }

    friend bool operator==(const ControlSystem& a, const ControlSystem& b) = default;
};

}  // namespace lcs
