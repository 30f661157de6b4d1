#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

// Univariate polynomial over the rationals, coefficients stored in ascending
// degree with no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree() == -1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RationalPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static RationalPoly constant(Rational r) { return RationalPoly{std::move(r)}; }
    static RationalPoly variable() { return RationalPoly{Rational(0), Rational(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const Rational& leading() const;

    bool is_monic() const { return !is_zero() && leading().is_one(); }
    RationalPoly monic() const;

    Rational eval(const Rational& x) const;
    RationalPoly derivative() const;

    // Multiplies by s^k.
    RationalPoly shifted(int k) const;
    RationalPoly pow(int e) const;

    RationalPoly operator-() const;
    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

    // Ascending coefficient list, e.g. s^2+1 -> "[1, 0, 1]".
    std::string str() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on zero divisor.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_div_exact(const RationalPoly& a, const RationalPoly& b);

// Monic gcd. poly_gcd(p, 0) = monic p. Throws BothZeroError when both vanish.
RationalPoly poly_gcd(const RationalPoly& p, const RationalPoly& q);

struct SquarefreeFactor {
    RationalPoly factor;  // monic, squarefree, nonconstant
    int multiplicity;     // strictly increasing across the returned sequence
};

// Yun's algorithm. Input must be nonzero; it is normalized to monic first, so
// the product of factor^multiplicity reproduces monic(p) exactly.
std::vector<SquarefreeFactor> squarefree_decompose(const RationalPoly& p);

// Number of distinct real roots of squarefree p in (lo, hi]; nullopt bounds
// mean -inf / +inf. Throws NotSquarefreeError when gcd(p, p') is nonconstant.
int sturm_real_root_count(const RationalPoly& p,
                          const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi);

namespace detail {

// Negative-remainder chain p0, p1, -rem(p0,p1), ... ending at the last nonzero.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p0, const RationalPoly& p1);

// Sign variations of the chain at a point (nullopt + positive=false -> -inf,
// positive=true -> +inf); zero entries are skipped.
int sign_variations(const std::vector<RationalPoly>& chain,
                    const std::optional<Rational>& at, bool positive_infinity);

// Cauchy index of b/a over the whole real line via the remainder chain.
int cauchy_index(const RationalPoly& a, const RationalPoly& b);

}  // namespace detail

}  // namespace lcs
