#include "lcs/equivalence.hpp"

#include "lcs/errors.hpp"

namespace lcs {

namespace {

// splitmix64; fully deterministic across platforms.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::linear: return "linear";
        case Relation::differential: return "differential";
        case Relation::topological: return "topological";
    }
    return "?";
}

SystemInvariants classify(const ControlSystem& sys) {
    CanonicalForm cf = canonical_form(sys);
    SystemInvariants inv;
    inv.n = sys.n;
    inv.m = sys.m;
    inv.k = cf.k;
    inv.r = r_sequence(sys);
    inv.p = cf.p;
    inv.inertia = inertia(cf.M);
    inv.zero_part_factors = zero_part_class(cf.M).invariant_factors;
    inv.uncontrollable_factors = cf.M.rows() ? invariant_factors(cf.M)
                                             : std::vector<RationalPoly>{};
    return inv;
}

RationalMatrix similarity_transform(const RationalMatrix& m1, const RationalMatrix& m2,
                                    std::uint64_t seed) {
    if (!m1.is_square() || !m2.is_square() || m1.rows() != m2.rows())
        throw Error("similarity transform: dimension mismatch");
    int n = m1.rows();
    if (n == 0) return RationalMatrix(0, 0);

    // Solutions X of M1 X - X M2 = 0, vectorized row-major.
    RationalMatrix coeff(n * n, n * n);
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = idx(i, j);
            for (int l = 0; l < n; ++l) {
                coeff(row, idx(l, j)) += m1(i, l);
                coeff(row, idx(i, l)) -= m2(l, j);
            }
        }
    RationalMatrix basis = kernel_basis(coeff);

    auto unvec = [n](const RationalMatrix& col) {
        RationalMatrix x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x(i, j) = col(i * n + j, 0);
        return x;
    };

    for (int c = 0; c < basis.cols(); ++c) {
        RationalMatrix x = unvec(basis.column(c));
        if (is_invertible(x)) return x;
    }
    Rng rng{seed};
    for (int attempt = 0; attempt < 256; ++attempt) {
        RationalMatrix combo(n * n, 1);
        for (int c = 0; c < basis.cols(); ++c) {
            Rational w(rng.range(-4, 4));
            if (w.is_zero()) continue;
            combo = combo + w * basis.column(c);
        }
        RationalMatrix x = unvec(combo);
        if (is_invertible(x)) return x;
    }
    throw Error("similarity transform: matrices are not similar");
}

namespace {

EquivalenceVerdict decide_feedback(const ControlSystem& s1, const ControlSystem& s2,
                                   Relation relation, std::uint64_t seed) {
    EquivalenceVerdict v;
    v.relation = relation;
    if (s1.n != s2.n || s1.m != s2.m) {
        v.failed_condition = "dimensions";
        return v;
    }
    CanonicalForm cf1 = canonical_form(s1);
    CanonicalForm cf2 = canonical_form(s2);
    if (cf1.k != cf2.k) {
        v.failed_condition = "kalman-rank";
        return v;
    }
    if (r_sequence(s1) != r_sequence(s2)) {
        v.failed_condition = "r-sequence";
        return v;
    }
    if (!fully_similar(cf1.M, cf2.M)) {
        v.failed_condition = "uncontrollable-similarity";
        return v;
    }

    // Equal r-sequences give equal p, hence identical canonical (C, D); the
    // canonical forms differ only in the uncontrollable block.
    if (cf1.C != cf2.C || cf1.D != cf2.D)
        throw Error("decide: canonical blocks disagree despite equal R");
    RationalMatrix x = similarity_transform(cf1.M, cf2.M, seed);
    FeedbackWitness bridge{RationalMatrix::block_diag(RationalMatrix::identity(cf1.k), x),
                           RationalMatrix::identity(s1.m), RationalMatrix(s1.m, s1.n)};
    FeedbackWitness w = compose(cf1.witness, compose(bridge, inverse(cf2.witness)));
    if (!witness_maps(s1, s2, w)) throw Error("decide: witness failed its substitution check");

    v.equivalent = true;
    v.witness = std::move(w);
    return v;
}

}  // namespace

EquivalenceVerdict decide_linear(const ControlSystem& s1, const ControlSystem& s2,
                                 std::uint64_t seed) {
    return decide_feedback(s1, s2, Relation::linear, seed);
}

EquivalenceVerdict decide_differential(const ControlSystem& s1, const ControlSystem& s2,
                                       std::uint64_t seed) {
    return decide_feedback(s1, s2, Relation::differential, seed);
}

EquivalenceVerdict decide_topological(const ControlSystem& s1, const ControlSystem& s2) {
    EquivalenceVerdict v;
    v.relation = Relation::topological;
    if (s1.n != s2.n || s1.m != s2.m) {
        v.failed_condition = "dimensions";
        return v;
    }
    CanonicalForm cf1 = canonical_form(s1);
    CanonicalForm cf2 = canonical_form(s2);
    if (cf1.k != cf2.k) {
        v.failed_condition = "kalman-rank";
        return v;
    }
    if (r_sequence(s1) != r_sequence(s2)) {
        v.failed_condition = "r-sequence";
        return v;
    }
    if (!(inertia(cf1.M) == inertia(cf2.M))) {
        v.failed_condition = "inertia";
        return v;
    }
    if (!zero_parts_similar(cf1.M, cf2.M)) {
        v.failed_condition = "zero-part-similarity";
        return v;
    }
    v.equivalent = true;
    return v;
}

}  // namespace lcs
