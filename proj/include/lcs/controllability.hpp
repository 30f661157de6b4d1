#pragma once

#include <vector>

#include "lcs/linalg.hpp"
#include "lcs/system.hpp"

namespace lcs {

// Brunovsky's two sequences plus the Kalman rank.
struct BrunovskySequences {
    int k = 0;
    std::vector<int> r;  // (r_0 .. r_{n-1})
    std::vector<int> p;  // (p_1 >= ... >= p_m), zero-padded to length m

    friend bool operator==(const BrunovskySequences& a, const BrunovskySequences& b) = default;
};

// Result of the greedy Krylov-chain selection: scan runs over powers of A
// (outer) and columns of B (inner), keeping a vector iff it enlarges the span
// of the kept set. A column whose vector is dropped stays dropped at all
// higher powers, so lengths[i] is the Krylov chain length of column i.
struct ChainSelection {
    int k = 0;
    std::vector<int> lengths;    // per original column of B
    std::vector<int> order;      // column indices, stable-sorted by descending length
    RationalMatrix scan_basis;   // n x k kept vectors in scan order
};

// [B | AB | ... | A^{n-1}B], n x (n*m).
RationalMatrix controllability_matrix(const ControlSystem& sys);

int kalman_rank(const ControlSystem& sys);

// Rank increments of the growing controllability matrix, length n.
std::vector<int> r_sequence(const ControlSystem& sys);

ChainSelection select_chains(const ControlSystem& sys);

// Nonincreasing chain lengths, zero-padded to length m.
std::vector<int> p_indices(const ControlSystem& sys);

BrunovskySequences brunovsky_sequences(const ControlSystem& sys);

// Conjugate partition of r: p_i = #{ j : r_j >= i }, padded to length m.
// Independent route to the controllability indices (used as a test oracle).
std::vector<int> conjugate_partition(const std::vector<int>& r, int m);

}  // namespace lcs
