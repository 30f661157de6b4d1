#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcs/decomposition.hpp"
#include "lcs/spectral.hpp"

namespace lcs {

inline constexpr std::uint64_t kDefaultSeed = 1;

// Complete invariant record of a system: the Brunovsky data of the
// controllable part and the spectral data of the uncontrollable block.
struct SystemInvariants {
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<int> r;
    std::vector<int> p;
    Inertia inertia;
    std::vector<RationalPoly> zero_part_factors;      // invariant factors of M^0
    std::vector<RationalPoly> uncontrollable_factors; // invariant factors of M

    friend bool operator==(const SystemInvariants& a, const SystemInvariants& b) = default;
};

SystemInvariants classify(const ControlSystem& sys);

enum class Relation { linear, differential, topological };

const char* relation_name(Relation r);

struct EquivalenceVerdict {
    Relation relation = Relation::linear;
    bool equivalent = false;
    // First violated invariant, in the fixed order
    // dimensions, kalman-rank, r-sequence, then inertia / similarity.
    std::string failed_condition;
    std::optional<FeedbackWitness> witness;  // linear/differential, positive verdicts only
};

// Equivalent iff k, R agree and the uncontrollable blocks are similar; on a
// positive verdict the composed witness is verified by substitution before it
// is returned.
EquivalenceVerdict decide_linear(const ControlSystem& s1, const ControlSystem& s2,
                                 std::uint64_t seed = kDefaultSeed);

// Differential equivalence coincides with linear equivalence.
EquivalenceVerdict decide_differential(const ControlSystem& s1, const ControlSystem& s2,
                                       std::uint64_t seed = kDefaultSeed);

// Equivalent iff k, R, the inertia triples and the similarity classes of the
// zero-real-part restrictions all agree. No witness is constructed.
EquivalenceVerdict decide_topological(const ControlSystem& s1, const ControlSystem& s2);

// Change of basis X (invertible, M1 X = X M2) between similar matrices, found
// in the kernel of the intertwining equation: kernel basis elements first,
// then seeded pseudo-random rational combinations. Throws Error if the
// matrices are not similar.
RationalMatrix similarity_transform(const RationalMatrix& m1, const RationalMatrix& m2,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace lcs
