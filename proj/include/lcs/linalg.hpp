#pragma once

#include <optional>
#include <vector>

#include "lcs/matrix.hpp"
#include "lcs/poly.hpp"

namespace lcs {

struct RrefResult {
    RationalMatrix R;             // reduced row echelon form
    RationalMatrix E;             // invertible, E * input == R
    std::vector<int> pivot_cols;  // strictly increasing
};

// Forward elimination with first-nonzero pivoting (lowest row index), then
// back-substitution. Fully deterministic.
RrefResult rref_with_transform(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Columns form a basis of the right null space; ordered by ascending free
// column, each vector has a unit entry at its free coordinate.
RationalMatrix kernel_basis(const RationalMatrix& m);

// Particular solution of A X = B with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

// Throws NonSquareError / SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& m);

bool is_invertible(const RationalMatrix& m);

// Monic characteristic polynomial det(sI - M) via the Faddeev-LeVerrier
// recurrence; exact. char_poly of the 0x0 matrix is 1.
RationalPoly char_poly(const RationalMatrix& m);

// Evaluates p at a square matrix (Horner).
RationalMatrix eval_poly(const RationalPoly& p, const RationalMatrix& m);

// Companion matrix of a monic polynomial of degree >= 1 (coefficients in the
// last column), so char_poly(companion(p)) == p.
RationalMatrix companion_matrix(const RationalPoly& p);

// Nontrivial invariant factors d1 | d2 | ... | dr of sI - M, monic, computed
// as the Smith normal form of the polynomial matrix over Q[s]. Two square
// matrices are similar iff these sequences are equal.
std::vector<RationalPoly> invariant_factors(const RationalMatrix& m);

// Incremental exact rank tracking; insert() returns true when the vector
// enlarges the span of those kept so far.
class RankTracker {
public:
    bool insert(std::vector<Rational> v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        int pivot;
        std::vector<Rational> v;  // pivot entry normalized to 1
    };
    std::vector<Row> rows_;
};

}  // namespace lcs
