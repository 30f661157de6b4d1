#include "lcs/poly.hpp"

#include <sstream>

#include "lcs/errors.hpp"

namespace lcs {

const Rational& RationalPoly::leading() const {
    if (is_zero()) throw ZeroPolynomialError();
    return c_.back();
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) throw ZeroPolynomialError();
    return leading().inverse() * *this;
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (degree() <= 0) return RationalPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> d(c_.size() + static_cast<std::size_t>(k), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[i + static_cast<std::size_t>(k)] = c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::pow(int e) const {
    RationalPoly acc = constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(d));
}

RationalPoly operator*(const Rational& a, const RationalPoly& b) {
    std::vector<Rational> d(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] = a * b.c_[i];
    return RationalPoly(std::move(d));
}

std::string RationalPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {RationalPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    Rational lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational q = c * lead_inv;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly poly_div_exact(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

RationalPoly poly_gcd(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZeroError();
    RationalPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = poly_divmod(a, b);
        (void)quot;
        a = b;
        b = rem;
    }
    return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decompose(const RationalPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    std::vector<SquarefreeFactor> out;
    RationalPoly f = p.monic();
    if (f.degree() == 0) return out;

    // Yun's algorithm.
    RationalPoly g = poly_gcd(f, f.derivative());
    RationalPoly w = poly_div_exact(f, g);
    RationalPoly y = poly_div_exact(f.derivative(), g);
    RationalPoly z = y - w.derivative();
    int mult = 1;
    while (w.degree() > 0) {
        RationalPoly fac = poly_gcd(w, z);
        if (fac.degree() > 0) out.push_back({fac, mult});
        w = poly_div_exact(w, fac);
        y = poly_div_exact(z, fac);
        z = y - w.derivative();
        ++mult;
    }
    return out;
}

namespace detail {

std::vector<RationalPoly> sturm_chain(const RationalPoly& p0, const RationalPoly& p1) {
    std::vector<RationalPoly> chain;
    if (!p0.is_zero()) chain.push_back(p0);
    if (!p1.is_zero()) chain.push_back(p1);
    while (chain.size() >= 2) {
        auto [q, r] = poly_divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<RationalPoly>& chain,
                    const std::optional<Rational>& at, bool positive_infinity) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s;
        if (at) {
            s = p.eval(*at).sign();
        } else if (p.is_zero()) {
            s = 0;
        } else {
            s = p.leading().sign();
            if (!positive_infinity && p.degree() % 2 == 1) s = -s;
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int cauchy_index(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto chain = sturm_chain(a, b);
    return sign_variations(chain, std::nullopt, false) -
           sign_variations(chain, std::nullopt, true);
}

}  // namespace detail

int sturm_real_root_count(const RationalPoly& p,
                          const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() == 0) return 0;
    if (poly_gcd(p, p.derivative()).degree() > 0) throw NotSquarefreeError();
    auto chain = detail::sturm_chain(p, p.derivative());
    int vlo = detail::sign_variations(chain, lo, false);
    int vhi = detail::sign_variations(chain, hi, true);
    return vlo - vhi;
}

}  // namespace lcs
