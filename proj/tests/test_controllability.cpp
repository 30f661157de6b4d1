#include <doctest.h>

#include <numeric>

#include "lcs/controllability.hpp"
#include "lcs/decomposition.hpp"
#include "support/gen.hpp"

using lcs::ControlSystem;
using lcs::Rational;
using lcs::RationalMatrix;

namespace {

ControlSystem double_integrator() {  // (J2, e2)
    RationalMatrix a(2, 2);
    a(0, 1) = Rational(1);
    RationalMatrix b(2, 1);
    b(1, 0) = Rational(1);
    return ControlSystem(a, b);
}

ControlSystem example43(long alpha) {
    RationalMatrix a(2, 2);
    a(1, 1) = Rational(alpha);
    RationalMatrix b(2, 1);
    b(0, 0) = Rational(1);
    return ControlSystem(a, b);
}

void check_sequence_constraints(const ControlSystem& sys) {
    auto seq = lcs::brunovsky_sequences(sys);
    int n = sys.n, m = sys.m;
    REQUIRE(static_cast<int>(seq.r.size()) == n);
    REQUIRE(static_cast<int>(seq.p.size()) == m);

    int p1 = seq.p.empty() ? 0 : seq.p.front();
    for (int j = 0; j < n; ++j) {
        CHECK(seq.r[j] >= 0);
        CHECK(seq.r[j] <= m);
        if (j > 0) CHECK(seq.r[j] <= seq.r[j - 1]);
        if (j >= p1) CHECK(seq.r[j] == 0);
    }
    CHECK(std::accumulate(seq.r.begin(), seq.r.end(), 0) == seq.k);

    int r0 = seq.r.empty() ? 0 : seq.r.front();
    for (int i = 0; i < m; ++i) {
        CHECK(seq.p[i] >= 0);
        CHECK(seq.p[i] <= n);
        if (i > 0) CHECK(seq.p[i] <= seq.p[i - 1]);
        if (i >= r0) CHECK(seq.p[i] == 0);
    }
    CHECK(std::accumulate(seq.p.begin(), seq.p.end(), 0) == seq.k);

    CHECK(seq.p == lcs::conjugate_partition(seq.r, m));
}

}  // namespace

TEST_CASE("controllability matrix block layout") {
    ControlSystem di = double_integrator();
    RationalMatrix expected{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(lcs::controllability_matrix(di) == expected);
    CHECK(lcs::kalman_rank(di) == 2);

    ControlSystem e43 = example43(-2);
    RationalMatrix expected43{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    CHECK(lcs::controllability_matrix(e43) == expected43);
    CHECK(lcs::kalman_rank(e43) == 1);

    // B = 0
    ControlSystem ode(RationalMatrix::identity(3), RationalMatrix(3, 2));
    CHECK(lcs::controllability_matrix(ode).is_zero());
    CHECK(lcs::kalman_rank(ode) == 0);
}

TEST_CASE("r sequence") {
    CHECK(lcs::r_sequence(double_integrator()) == std::vector<int>{1, 1});
    ControlSystem ode(RationalMatrix::identity(3), RationalMatrix(3, 2));
    CHECK(lcs::r_sequence(ode) == std::vector<int>{0, 0, 0});

    // canonical pair with p = (2, 1): r = (2, 1, 0)
    std::vector<int> p{2, 1};
    ControlSystem canonical(lcs::canonical_shift_blocks(p), lcs::canonical_input_blocks(p, 2));
    CHECK(lcs::r_sequence(canonical) == std::vector<int>{2, 1, 0});
}

TEST_CASE("p indices") {
    CHECK(lcs::p_indices(double_integrator()) == std::vector<int>{2});
    ControlSystem ode(RationalMatrix::identity(2), RationalMatrix(2, 3));
    CHECK(lcs::p_indices(ode) == std::vector<int>{0, 0, 0});
    CHECK(lcs::p_indices(example43(-2)) == std::vector<int>{1});

    // m = 0 is a pure ODE
    ControlSystem pure(RationalMatrix::identity(2), RationalMatrix(2, 0));
    CHECK(lcs::p_indices(pure).empty());
    CHECK(lcs::kalman_rank(pure) == 0);
}

TEST_CASE("sequence constraints and conjugate partition on random systems") {
    gen::Rng rng(404);
    for (int rep = 0; rep < 60; ++rep) check_sequence_constraints(gen::system(rng));
}

TEST_CASE("k, r, p are feedback invariants") {
    gen::Rng rng(505);
    for (int rep = 0; rep < 25; ++rep) {
        ControlSystem sys = gen::system(rng);
        ControlSystem image = lcs::apply_witness(sys, gen::witness(rng, sys.n, sys.m));
        CHECK(lcs::kalman_rank(image) == lcs::kalman_rank(sys));
        CHECK(lcs::r_sequence(image) == lcs::r_sequence(sys));
        CHECK(lcs::p_indices(image) == lcs::p_indices(sys));
    }
}

TEST_CASE("complete controllability criterion") {
    gen::Rng rng(606);
    for (int rep = 0; rep < 20; ++rep) {
        ControlSystem sys = gen::system(rng);
        CHECK((lcs::kalman_rank(sys) == sys.n) ==
              (lcs::rank(lcs::controllability_matrix(sys)) == sys.n));
    }
}
