#include <doctest.h>

#include "lcs/poly.hpp"
#include "support/gen.hpp"

using lcs::Rational;
using lcs::RationalPoly;

namespace {
RationalPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}
}  // namespace

TEST_CASE("polynomial basics") {
    RationalPoly zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.is_zero());

    RationalPoly p = from_ints({1, 0, 1});  // s^2 + 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(5));
    CHECK(p.derivative() == from_ints({0, 2}));
    CHECK(from_ints({0, 0, 0}).is_zero());

    RationalPoly q = from_ints({-1, 1});  // s - 1
    CHECK(p * q == from_ints({-1, 1, -1, 1}));
    CHECK(p + q == from_ints({0, 1, 1}));
    CHECK((p - p).is_zero());
}

TEST_CASE("polynomial division") {
    RationalPoly a = from_ints({-1, 0, 0, 1});  // s^3 - 1
    RationalPoly b = from_ints({-1, 1});        // s - 1
    auto [q, r] = lcs::poly_divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == from_ints({1, 1, 1}));
    CHECK(q * b + r == a);

    auto [q2, r2] = lcs::poly_divmod(from_ints({1, 1}), from_ints({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == from_ints({1, 1}));
    CHECK_THROWS_AS(lcs::poly_divmod(a, RationalPoly()), lcs::Error);
}

TEST_CASE("poly_gcd matches the named cases") {
    // (s^2-1, s-1) -> s-1
    CHECK(lcs::poly_gcd(from_ints({-1, 0, 1}), from_ints({-1, 1})) == from_ints({-1, 1}));
    // coprime
    CHECK(lcs::poly_gcd(from_ints({1, 0, 1}), from_ints({1, 1})) ==
          RationalPoly::constant(Rational(1)));
    // gcd with zero is the monic normalization
    RationalPoly p = Rational(3) * from_ints({2, 1});
    CHECK(lcs::poly_gcd(p, RationalPoly()) == from_ints({2, 1}));
    CHECK_THROWS_AS(lcs::poly_gcd(RationalPoly(), RationalPoly()), lcs::BothZeroError);
}

TEST_CASE("squarefree decomposition") {
    // s^3 -> [(s, 3)]
    auto d = lcs::squarefree_decompose(from_ints({0, 0, 0, 1}));
    REQUIRE(d.size() == 1);
    CHECK(d[0].factor == from_ints({0, 1}));
    CHECK(d[0].multiplicity == 3);

    // (s-1)(s+1) already squarefree
    d = lcs::squarefree_decompose(from_ints({-1, 0, 1}));
    REQUIRE(d.size() == 1);
    CHECK(d[0].factor == from_ints({-1, 0, 1}));
    CHECK(d[0].multiplicity == 1);

    // s^2 (s^2+1) -> [(s^2+1, 1), (s, 2)]
    d = lcs::squarefree_decompose(from_ints({0, 0, 1, 0, 1}));
    REQUIRE(d.size() == 2);
    CHECK(d[0].factor == from_ints({1, 0, 1}));
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].factor == from_ints({0, 1}));
    CHECK(d[1].multiplicity == 2);

    CHECK_THROWS_AS(lcs::squarefree_decompose(RationalPoly()), lcs::ZeroPolynomialError);
}

TEST_CASE("squarefree decomposition reconstructs its input") {
    gen::Rng rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        // Random monic product with repeated factors.
        RationalPoly p = RationalPoly::constant(Rational(1));
        int factors = static_cast<int>(rng.range(1, 3));
        for (int f = 0; f < factors; ++f) {
            RationalPoly lin{rng.rational(2, 2), Rational(1)};
            p = p * lin.pow(static_cast<int>(rng.range(1, 3)));
        }
        RationalPoly rebuilt = RationalPoly::constant(Rational(1));
        for (const auto& [factor, mult] : lcs::squarefree_decompose(p))
            rebuilt = rebuilt * factor.pow(mult);
        CHECK(rebuilt == p.monic());
    }
}

TEST_CASE("sturm root counting") {
    // s^2+1: no real roots
    CHECK(lcs::sturm_real_root_count(from_ints({1, 0, 1}), std::nullopt, std::nullopt) == 0);
    // s^2-2: two real roots
    CHECK(lcs::sturm_real_root_count(from_ints({-2, 0, 1}), std::nullopt, std::nullopt) == 2);
    // s^3-s on (0, inf): only root 1
    RationalPoly cubic = from_ints({0, -1, 0, 1});
    CHECK(lcs::sturm_real_root_count(cubic, Rational(0), std::nullopt) == 1);
    // (a, b] includes the right endpoint
    CHECK(lcs::sturm_real_root_count(cubic, Rational(0), Rational(1)) == 1);
    CHECK(lcs::sturm_real_root_count(cubic, Rational(-1), Rational(0)) == 1);
    CHECK(lcs::sturm_real_root_count(cubic, Rational(-2), std::nullopt) == 3);

    CHECK_THROWS_AS(
        lcs::sturm_real_root_count(from_ints({0, 0, 1}), std::nullopt, std::nullopt),
        lcs::NotSquarefreeError);
}

TEST_CASE("sturm count against dense scan") {
    gen::Rng rng(77);
    for (int rep = 0; rep < 30; ++rep) {
        // Product of distinct integer-root factors and an irreducible part.
        RationalPoly p = from_ints({1, 0, 1});
        std::vector<long> roots;
        for (long r = -3; r <= 3; ++r)
            if (rng.range(0, 1)) {
                roots.push_back(r);
                p = p * RationalPoly{Rational(-r), Rational(1)};
            }
        long lo = rng.range(-4, 0), hi = rng.range(1, 4);
        int expected = 0;
        for (long r : roots)
            if (r > lo && r <= hi) ++expected;
        CHECK(lcs::sturm_real_root_count(p, Rational(lo), Rational(hi)) == expected);
    }
}
