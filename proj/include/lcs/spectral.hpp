#pragma once

#include <vector>

#include "lcs/linalg.hpp"

namespace lcs {

// Eigenvalue counts (with multiplicity) by sign of the real part.
struct Inertia {
    int n_neg = 0;
    int n_pos = 0;
    int n_zero = 0;

    friend bool operator==(const Inertia& a, const Inertia& b) = default;
};

// Number of roots of p on the imaginary axis, with multiplicity. Exact for
// every rational polynomial (no factor extraction involved).
int axis_root_count(const RationalPoly& p);

// The monic divisor of p whose roots are exactly p's imaginary-axis roots,
// with multiplicity. Throws ZeroPolynomialError on zero input and
// AxisFactorError when the factor exists only with irrational coefficients
// (possible: irreducible rational polynomials can mix axis and off-axis
// roots, e.g. s^4 + 2 s^2 - 1).
RationalPoly imaginary_axis_factor(const RationalPoly& p);

// Exact inertia of a square matrix (0x0 allowed). Half-plane counts come from
// the Cauchy-index form of the Routh-Hurwitz criterion evaluated with
// generalized Sturm chains, per squarefree factor of the characteristic
// polynomial.
Inertia inertia(const RationalMatrix& m);

struct ZeroPartClass {
    RationalPoly p0;  // imaginary-axis factor of char_poly(M)
    std::vector<RationalPoly> invariant_factors;  // of M restricted to ker p0(M)
};

ZeroPartClass zero_part_class(const RationalMatrix& m);

// True iff the restrictions of M1 and M2 to their imaginary-axis generalized
// eigenspaces are similar. Decided by comparing the axis parts of the
// invariant-factor chains through exact root counting and gcds, so it stays
// total even where imaginary_axis_factor cannot be represented.
bool zero_parts_similar(const RationalMatrix& m1, const RationalMatrix& m2);

// True iff invariant_factors(M1) == invariant_factors(M2) (and dimensions
// agree); the standard complete similarity test.
bool fully_similar(const RationalMatrix& m1, const RationalMatrix& m2);

namespace detail {

// Real/imaginary parts of q(i w) for real-coefficient q: u is even, v odd.
std::pair<RationalPoly, RationalPoly> axis_split(const RationalPoly& q);

// Axis-root count of a squarefree polynomial.
int axis_root_count_squarefree(const RationalPoly& q);

// n_neg - n_pos over the off-axis spectrum of a squarefree polynomial.
int half_plane_signature_squarefree(const RationalPoly& q);

// True iff squarefree f and g have the same set of imaginary-axis roots.
bool same_axis_roots(const RationalPoly& f, const RationalPoly& g);

}  // namespace detail

}  // namespace lcs
