#pragma once

// Deterministic generators for test corpora. splitmix64 keeps every run (and
// platform) bit-identical.

#include <cstdint>
#include <vector>

#include "lcs/decomposition.hpp"
#include "lcs/linalg.hpp"
#include "lcs/system.hpp"

namespace gen {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Entries in [-max_num, max_num] with denominator in [1, max_den].
    lcs::Rational rational(long max_num = 3, long max_den = 4) {
        return lcs::Rational(range(-max_num, max_num), range(1, max_den));
    }
};

inline lcs::RationalMatrix matrix(Rng& rng, int rows, int cols, long max_num = 3,
                                  long max_den = 4) {
    lcs::RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.rational(max_num, max_den);
    return m;
}

inline lcs::RationalMatrix invertible(Rng& rng, int n, long max_num = 3, long max_den = 4) {
    for (;;) {
        lcs::RationalMatrix m = matrix(rng, n, n, max_num, max_den);
        if (lcs::is_invertible(m)) return m;
    }
}

inline lcs::ControlSystem system(Rng& rng, int max_n = 6, int max_m = 3) {
    int n = static_cast<int>(rng.range(1, max_n));
    int m = static_cast<int>(rng.range(0, max_m));
    return lcs::ControlSystem(matrix(rng, n, n), matrix(rng, n, m));
}

inline lcs::FeedbackWitness witness(Rng& rng, int n, int m) {
    return {invertible(rng, n), invertible(rng, m), matrix(rng, m, n)};
}

inline lcs::ControlSystem controllable_system(Rng& rng, int max_n = 5, int max_m = 3) {
    for (;;) {
        int n = static_cast<int>(rng.range(1, max_n));
        int m = static_cast<int>(rng.range(1, max_m));
        lcs::ControlSystem sys(matrix(rng, n, n), matrix(rng, n, m));
        if (lcs::kalman_rank(sys) == sys.n) return sys;
    }
}

}  // namespace gen
