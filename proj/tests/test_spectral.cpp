#include <doctest.h>

#include "lcs/spectral.hpp"
#include "support/gen.hpp"

using lcs::Inertia;
using lcs::Rational;
using lcs::RationalMatrix;
using lcs::RationalPoly;

namespace {

RationalPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

RationalMatrix diag(std::initializer_list<long> ds) {
    RationalMatrix m(static_cast<int>(ds.size()), static_cast<int>(ds.size()));
    int i = 0;
    for (long d : ds) {
        m(i, i) = Rational(d);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("imaginary axis factor: named cases") {
    CHECK(lcs::imaginary_axis_factor(from_ints({1, 0, 1})) == from_ints({1, 0, 1}));
    CHECK(lcs::imaginary_axis_factor(from_ints({-2, -1, 1})) ==
          RationalPoly::constant(Rational(1)));  // (s+1)(s-2)
    CHECK(lcs::imaginary_axis_factor(from_ints({0, 0, -1, 1})) == from_ints({0, 0, 1}));  // s^2(s-1)
    CHECK_THROWS_AS(lcs::imaginary_axis_factor(RationalPoly()), lcs::ZeroPolynomialError);
}

TEST_CASE("imaginary axis factor: mixed and awkward splits") {
    // s^4 - 1 = (s^2+1)(s-1)(s+1): origin-symmetric real pair must be excluded
    CHECK(lcs::imaginary_axis_factor(from_ints({-1, 0, 0, 0, 1})) == from_ints({1, 0, 1}));
    // (s^2+2)(s^2-3): irrational axis pair with rational s^2
    RationalPoly p = from_ints({2, 0, 1}) * from_ints({-3, 0, 1});
    CHECK(lcs::imaginary_axis_factor(p) == from_ints({2, 0, 1}));
    // s(s^2+4)^2 (s-1)
    p = from_ints({0, 1}) * from_ints({4, 0, 1}).pow(2) * from_ints({-1, 1});
    CHECK(lcs::imaginary_axis_factor(p) == from_ints({0, 1}) * from_ints({4, 0, 1}).pow(2));
    // even cofactor split: (s^4+4s^2+1)(s^4+3), all axis roots in the first factor
    p = from_ints({1, 0, 4, 0, 1}) * from_ints({3, 0, 0, 0, 1});
    CHECK(lcs::imaginary_axis_factor(p) == from_ints({1, 0, 4, 0, 1}));
}

TEST_CASE("imaginary axis factor: irrational factor is rejected, count stays exact") {
    // s^4 + 2 s^2 - 1 has axis pair with s^2 = -(1+sqrt 2): no rational factor
    RationalPoly p = from_ints({-1, 0, 2, 0, 1});
    CHECK(lcs::axis_root_count(p) == 2);
    CHECK_THROWS_AS(lcs::imaginary_axis_factor(p), lcs::AxisFactorError);
    // same for s^4 - 2
    p = from_ints({-2, 0, 0, 0, 1});
    CHECK(lcs::axis_root_count(p) == 2);
    CHECK_THROWS_AS(lcs::imaginary_axis_factor(p), lcs::AxisFactorError);
}

TEST_CASE("axis factor divides and has the right degree") {
    gen::Rng rng(21);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix m = gen::matrix(rng, n, n, 2, 2);
        RationalPoly q = lcs::char_poly(m);
        RationalPoly p0 = lcs::imaginary_axis_factor(q);
        auto [quot, rem] = lcs::poly_divmod(q, p0);
        (void)quot;
        CHECK(rem.is_zero());
        CHECK(p0.degree() == lcs::axis_root_count(q));
    }
}

TEST_CASE("inertia: named cases") {
    CHECK(lcs::inertia(diag({-1, 2, 0})) == Inertia{1, 1, 1});

    RationalMatrix rot(2, 2);
    rot(0, 1) = Rational(1);
    rot(1, 0) = Rational(-1);
    CHECK(lcs::inertia(rot) == Inertia{0, 0, 2});

    // companion of (s+1)^2 (s-3)(s^2+4): inertia (2, 1, 2)
    RationalPoly p = from_ints({1, 1}).pow(2) * from_ints({-3, 1}) * from_ints({4, 0, 1});
    CHECK(lcs::inertia(lcs::companion_matrix(p)) == Inertia{2, 1, 2});

    CHECK(lcs::inertia(RationalMatrix(0, 0)) == Inertia{0, 0, 0});
    CHECK_THROWS_AS(lcs::inertia(RationalMatrix(1, 2)), lcs::NonSquareError);
}

TEST_CASE("inertia on constructed companion blocks") {
    gen::Rng rng(22);
    std::vector<RationalPoly> pool{
        from_ints({1, 1}),  from_ints({-1, 1}),   from_ints({2, 1}),  from_ints({-2, 1}),
        from_ints({1, 0, 1}), from_ints({3, 0, 1}), from_ints({0, 1}),
    };
    std::vector<Inertia> pool_inertia{
        {1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}, {0, 0, 2}, {0, 0, 1},
    };
    for (int rep = 0; rep < 25; ++rep) {
        RationalMatrix m(0, 0);
        Inertia expected;
        int blocks = static_cast<int>(rng.range(1, 3));
        for (int b = 0; b < blocks; ++b) {
            std::size_t pick = static_cast<std::size_t>(rng.range(0, 6));
            int mult = static_cast<int>(rng.range(1, 2));
            m = RationalMatrix::block_diag(m, lcs::companion_matrix(pool[pick].pow(mult)));
            expected.n_neg += mult * pool_inertia[pick].n_neg;
            expected.n_pos += mult * pool_inertia[pick].n_pos;
            expected.n_zero += mult * pool_inertia[pick].n_zero;
        }
        CHECK(lcs::inertia(m) == expected);
    }
}

TEST_CASE("inertia against randomized constructed spectra") {
    // Products of linear factors with known root signs and quadratics with
    // known complex pairs, raised to small powers; companion matrices give
    // the matrix under test, the construction gives the oracle counts.
    gen::Rng rng(28);
    for (int rep = 0; rep < 40; ++rep) {
        RationalPoly p = RationalPoly::constant(Rational(1));
        Inertia expected;
        int factors = static_cast<int>(rng.range(1, 3));
        for (int f = 0; f < factors; ++f) {
            int mult = static_cast<int>(rng.range(1, 2));
            if (rng.range(0, 1)) {
                long r = rng.range(1, 3) * (rng.range(0, 1) ? 1 : -1);
                p = p * RationalPoly{Rational(-r), Rational(1)}.pow(mult);
                (r < 0 ? expected.n_neg : expected.n_pos) += mult;
            } else {
                // s^2 + b s + c with 4c > b^2: complex pair, real part -b/2
                long b = rng.range(-2, 2);
                long c = (b * b) / 4 + static_cast<long>(rng.range(1, 3));
                p = p * RationalPoly{Rational(c), Rational(b), Rational(1)}.pow(mult);
                if (b > 0) expected.n_neg += 2 * mult;
                else if (b < 0) expected.n_pos += 2 * mult;
                else expected.n_zero += 2 * mult;
            }
        }
        CHECK(lcs::inertia(lcs::companion_matrix(p)) == expected);
    }
}

TEST_CASE("inertia is a similarity invariant") {
    gen::Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix m = gen::matrix(rng, n, n, 2, 2);
        RationalMatrix t = gen::invertible(rng, n, 2, 2);
        Inertia i1 = lcs::inertia(m);
        CHECK(i1 == lcs::inertia(lcs::inverse(t) * m * t));
        CHECK(i1.n_neg + i1.n_pos + i1.n_zero == n);
    }
}

TEST_CASE("zero part class: named cases") {
    auto z = lcs::zero_part_class(diag({-1, -2}));
    CHECK(z.p0 == RationalPoly::constant(Rational(1)));
    CHECK(z.invariant_factors.empty());

    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    z = lcs::zero_part_class(j2);
    CHECK(z.p0 == from_ints({0, 0, 1}));
    REQUIRE(z.invariant_factors.size() == 1);
    CHECK(z.invariant_factors[0] == from_ints({0, 0, 1}));

    z = lcs::zero_part_class(RationalMatrix(2, 2));
    CHECK(z.p0 == from_ints({0, 0, 1}));
    REQUIRE(z.invariant_factors.size() == 2);
    CHECK(z.invariant_factors[0] == from_ints({0, 1}));
    CHECK(z.invariant_factors[1] == from_ints({0, 1}));
}

TEST_CASE("zero part class on a mixed block diagonal") {
    // blockdiag(rotation, -1, J2): p0 = (s^2+1) s^2
    RationalMatrix rot(2, 2);
    rot(0, 1) = Rational(1);
    rot(1, 0) = Rational(-1);
    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    RationalMatrix m = RationalMatrix::block_diag(RationalMatrix::block_diag(rot, diag({-1})), j2);
    auto z = lcs::zero_part_class(m);
    CHECK(z.p0 == from_ints({1, 0, 1}) * from_ints({0, 0, 1}));
    REQUIRE(z.invariant_factors.size() == 1);
    CHECK(z.invariant_factors[0] == from_ints({1, 0, 1}) * from_ints({0, 0, 1}));
}

TEST_CASE("zero parts similar: named cases") {
    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    CHECK_FALSE(lcs::zero_parts_similar(j2, RationalMatrix(2, 2)));
    CHECK(lcs::zero_parts_similar(diag({-1}), diag({-2})));
    CHECK(lcs::zero_parts_similar(RationalMatrix(0, 0), diag({-3})));

    // same axis part, different off-axis parts
    RationalMatrix a = RationalMatrix::block_diag(j2, diag({-1}));
    RationalMatrix b = RationalMatrix::block_diag(j2, diag({7}));
    CHECK(lcs::zero_parts_similar(a, b));

    // (s^2+1)^2 in one block vs two (s^2+1) blocks: not similar
    RationalPoly q = from_ints({1, 0, 1});
    RationalMatrix one_block = lcs::companion_matrix(q.pow(2));
    RationalMatrix two_blocks =
        RationalMatrix::block_diag(lcs::companion_matrix(q), lcs::companion_matrix(q));
    CHECK_FALSE(lcs::zero_parts_similar(one_block, two_blocks));
    CHECK(lcs::zero_parts_similar(one_block, one_block));
}

TEST_CASE("zero parts similar handles irrational axis factors") {
    // companion(s^4 + 2 s^2 - 1): axis factor irrational, decision still exact
    RationalPoly p = from_ints({-1, 0, 2, 0, 1});
    RationalMatrix m = lcs::companion_matrix(p);
    CHECK(lcs::zero_parts_similar(m, m));
    gen::Rng rng(24);
    RationalMatrix t = gen::invertible(rng, 4, 2, 2);
    CHECK(lcs::zero_parts_similar(m, lcs::inverse(t) * m * t));
    // different irrational axis structure: s^4 - 2 vs s^4 + 2 s^2 - 1
    CHECK_FALSE(lcs::zero_parts_similar(m, lcs::companion_matrix(from_ints({-2, 0, 0, 0, 1}))));
}

TEST_CASE("zero parts similar under similarity transforms") {
    gen::Rng rng(25);
    for (int rep = 0; rep < 15; ++rep) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix m = gen::matrix(rng, n, n, 2, 2);
        RationalMatrix t = gen::invertible(rng, n, 2, 2);
        CHECK(lcs::zero_parts_similar(m, lcs::inverse(t) * m * t));
    }
}

TEST_CASE("zero parts similar is an equivalence relation on sampled triples") {
    gen::Rng rng(27);
    std::vector<RationalMatrix> pool;
    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    pool.push_back(j2);
    pool.push_back(RationalMatrix(2, 2));
    pool.push_back(diag({-1, 3}));
    pool.push_back(RationalMatrix::block_diag(j2, diag({-2})));
    for (int rep = 0; rep < 5; ++rep) pool.push_back(gen::matrix(rng, 3, 3, 1, 2));

    for (const auto& a : pool) CHECK(lcs::zero_parts_similar(a, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            CHECK(lcs::zero_parts_similar(a, b) == lcs::zero_parts_similar(b, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (lcs::zero_parts_similar(a, b) && lcs::zero_parts_similar(b, c))
                    CHECK(lcs::zero_parts_similar(a, c));
}

TEST_CASE("zero-part similarity agrees with materialized invariant factors") {
    // Dual route: wherever the axis factor is representable, the chain
    // comparison must coincide with comparing zero_part_class factor lists.
    gen::Rng rng(29);
    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    RationalMatrix rot(2, 2);
    rot(0, 1) = Rational(1);
    rot(1, 0) = Rational(-1);
    std::vector<RationalMatrix> axis_pool{RationalMatrix(0, 0), j2, RationalMatrix(2, 2), rot,
                                          lcs::companion_matrix(from_ints({1, 0, 1}).pow(2))};
    auto make = [&](std::size_t pick) {
        int extra = static_cast<int>(rng.range(1, 2));
        RationalMatrix m = RationalMatrix::block_diag(axis_pool[pick],
                                                      gen::matrix(rng, extra, extra, 2, 2));
        RationalMatrix t = gen::invertible(rng, m.rows(), 1, 2);
        return lcs::inverse(t) * m * t;
    };
    for (int rep = 0; rep < 20; ++rep) {
        RationalMatrix m1 = make(static_cast<std::size_t>(rng.range(0, 4)));
        RationalMatrix m2 = make(static_cast<std::size_t>(rng.range(0, 4)));
        bool via_chain = lcs::zero_parts_similar(m1, m2);
        bool via_lists = lcs::zero_part_class(m1).invariant_factors ==
                         lcs::zero_part_class(m2).invariant_factors;
        CHECK(via_chain == via_lists);
    }
}

TEST_CASE("fully similar") {
    RationalMatrix j2(2, 2);
    j2(0, 1) = Rational(1);
    CHECK(lcs::fully_similar(j2, j2));
    CHECK_FALSE(lcs::fully_similar(j2, RationalMatrix(2, 2)));
    CHECK_FALSE(lcs::fully_similar(j2, RationalMatrix(3, 3)));
    CHECK(lcs::fully_similar(RationalMatrix(0, 0), RationalMatrix(0, 0)));

    gen::Rng rng(26);
    for (int rep = 0; rep < 15; ++rep) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix m = gen::matrix(rng, n, n, 2, 2);
        RationalMatrix t = gen::invertible(rng, n, 2, 2);
        CHECK(lcs::fully_similar(m, lcs::inverse(t) * m * t));
    }
}
