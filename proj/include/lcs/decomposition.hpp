#pragma once

#include <utility>
#include <vector>

#include "lcs/controllability.hpp"
#include "lcs/system.hpp"

namespace lcs {

// Feedback transformation per Definition: A2 = O^-1 A1 O + O^-1 B1 L,
// B2 = O^-1 B1 Q, with O (n x n) and Q (m x m) invertible, L m x n.
struct FeedbackWitness {
    RationalMatrix O;
    RationalMatrix Q;
    RationalMatrix L;

    static FeedbackWitness identity(int n, int m) {
        return {RationalMatrix::identity(n), RationalMatrix::identity(m), RationalMatrix(m, n)};
    }

    friend bool operator==(const FeedbackWitness& a, const FeedbackWitness& b) = default;
};

// Applies w to sys; throws SingularWitnessError when O or Q is singular.
ControlSystem apply_witness(const ControlSystem& sys, const FeedbackWitness& w);

// compose(w1, w2) maps through w1 then w2: O = O1 O2, Q = Q1 Q2,
// L = L1 O2 + Q1 L2.
FeedbackWitness compose(const FeedbackWitness& w1, const FeedbackWitness& w2);
FeedbackWitness inverse(const FeedbackWitness& w);

// Exact check of the defining equations against a claimed image system.
bool witness_maps(const ControlSystem& from, const ControlSystem& to, const FeedbackWitness& w);

struct KalmanSplit {
    int k = 0;
    RationalMatrix T;    // invertible; first k columns span the controllable subspace
    RationalMatrix A11;  // k x k, (A11, B1) completely controllable
    RationalMatrix A12;  // k x (n-k)
    RationalMatrix A22;  // (n-k) x (n-k)
    RationalMatrix B1;   // k x m
};

// T^-1 A T = [[A11, A12], [0, A22]], T^-1 B = [B1; 0]. The first k columns of
// T are the kept chain vectors in scan order, completed by standard basis
// vectors.
KalmanSplit kalman_split(const ControlSystem& sys);

// Builders for the canonical pair of a given index sequence: blockdiag of
// shift blocks J_q (superdiagonal ones) and the matching unit input columns.
RationalMatrix canonical_shift_blocks(const std::vector<int>& p);
RationalMatrix canonical_input_blocks(const std::vector<int>& p, int m);

struct BrunovskyNormalization {
    FeedbackWitness witness;  // maps (A11, B1) exactly onto the canonical pair
    std::vector<int> p;       // nonincreasing, zero-padded to m
};

// Controller-form normalization of a completely controllable pair. The basis
// rows are q_i A^{j-1} where q_i is dual to the head of chain i; the result
// is verified by substitution before returning. Throws NotControllableError.
BrunovskyNormalization brunovsky_normalize(const RationalMatrix& a11, const RationalMatrix& b1);

// Exact solution of A11 Z - Z A22 + B1 W = -A12 (rref particular solution,
// free variables zero). Throws InconsistentSystemError (cannot happen for
// controllable (A11, B1)).
std::pair<RationalMatrix, RationalMatrix> decouple_cross_block(const RationalMatrix& a11,
                                                               const RationalMatrix& a12,
                                                               const RationalMatrix& a22,
                                                               const RationalMatrix& b1);

struct CanonicalForm {
    int k = 0;
    RationalMatrix C;  // k x k shift blocks
    RationalMatrix D;  // k x m unit columns
    RationalMatrix M;  // (n-k) x (n-k) uncontrollable block in the split basis
    std::vector<int> p;
    FeedbackWitness witness;  // maps the source system onto (blockdiag(C, M), [D; 0])
};

// Split, decouple, normalize; the composed witness is verified exactly.
CanonicalForm canonical_form(const ControlSystem& sys);

ControlSystem canonical_system(const CanonicalForm& cf);

}  // namespace lcs
