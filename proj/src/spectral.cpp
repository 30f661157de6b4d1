#include "lcs/spectral.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "lcs/errors.hpp"

namespace lcs {

namespace detail {

std::pair<RationalPoly, RationalPoly> axis_split(const RationalPoly& q) {
    // q(iw): s^j -> i^j w^j, so coefficients land in u (j even) or v (j odd)
    // with signs cycling +,+,-,-.
    std::vector<Rational> u(q.coeffs().size(), Rational(0));
    std::vector<Rational> v(q.coeffs().size(), Rational(0));
    for (int j = 0; j <= q.degree(); ++j) {
        Rational c = q.coeff(j);
        int rem = j % 4;
        if (rem == 0) u[static_cast<std::size_t>(j)] = c;
        else if (rem == 1) v[static_cast<std::size_t>(j)] = c;
        else if (rem == 2) u[static_cast<std::size_t>(j)] = -c;
        else v[static_cast<std::size_t>(j)] = -c;
    }
    return {RationalPoly(std::move(u)), RationalPoly(std::move(v))};
}

namespace {

// Common factor of u and v: its real roots w0 correspond one-to-one to the
// axis roots i*w0 of q. The root set is symmetric under negation, so after
// the w^delta factor it is an even polynomial g2(w^2).
struct AxisStructure {
    int delta = 0;    // 1 iff 0 is a root of q
    RationalPoly g2;  // squarefree, w^delta * g2(w^2) = gcd(u, v)
};

AxisStructure axis_structure(const RationalPoly& q) {
    auto [u, v] = axis_split(q);
    AxisStructure st;
    RationalPoly g;
    if (v.is_zero())
        g = u.monic();
    else if (u.is_zero())
        g = v.monic();
    else
        g = poly_gcd(u, v);

    if (g.degree() >= 1 && g.coeff(0).is_zero()) {
        st.delta = 1;
        g = poly_div_exact(g, RationalPoly::variable());
    }
    // Even-part extraction; odd coefficients vanish by the +/- root symmetry.
    std::vector<Rational> even((static_cast<std::size_t>(g.degree()) / 2) + 1, Rational(0));
    for (int j = 0; j <= g.degree(); ++j) {
        if (j % 2 == 1) {
            if (!g.coeff(j).is_zero()) throw Error("axis structure: expected even polynomial");
        } else {
            even[static_cast<std::size_t>(j / 2)] = g.coeff(j);
        }
    }
    st.g2 = RationalPoly(std::move(even));
    return st;
}

int positive_root_count(const RationalPoly& p) {
    if (p.degree() < 1) return 0;
    return sturm_real_root_count(p, Rational(0), std::nullopt);
}

// Any rational root of a squarefree polynomial, found by Sturm isolation and
// an exact candidate test: every rational root is an integer multiple of
// 1/lcm(coefficient denominators) once the polynomial is made monic.
std::optional<Rational> find_rational_root(const RationalPoly& p) {
    if (p.coeff(0).is_zero()) return Rational(0);
    int total = sturm_real_root_count(p, std::nullopt, std::nullopt);
    if (total == 0) return std::nullopt;

    mpz_class den_lcm = 1;
    for (int j = 0; j <= p.degree(); ++j) den_lcm = lcm(den_lcm, p.coeff(j).den());
    Rational step(mpq_class(1, den_lcm));
    Rational half = Rational(1, 2) * step;

    Rational bound(1);
    for (int j = 0; j < p.degree(); ++j) {
        Rational a = (p.coeff(j) / p.leading()).abs();
        if (a > bound) bound = a;
    }
    bound += Rational(1);

    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int count = sturm_real_root_count(p, lo, hi);
        if (count == 0) continue;
        Rational mid = Rational(1, 2) * (lo + hi);
        if (p.eval(mid).is_zero()) return mid;
        if (count == 1 && hi - lo < half) {
            // At most one multiple of 1/den_lcm lies in (lo, hi].
            mpz_class num, scaled(lo.num() * den_lcm);
            mpz_cdiv_q(num.get_mpz_t(), scaled.get_mpz_t(), lo.den().get_mpz_t());
            Rational cand(mpq_class(num, den_lcm));
            if (cand == lo) cand += step;
            if (cand <= hi && p.eval(cand).is_zero()) return cand;
            continue;  // the isolated root is irrational
        }
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    return std::nullopt;
}

// Positive-real-root factor of a squarefree polynomial; false when it cannot
// be separated with rational coefficients.
bool extract_positive_factor(const RationalPoly& g2, RationalPoly& out) {
    out = RationalPoly::constant(Rational(1));
    RationalPoly rem = g2.monic();
    for (;;) {
        if (rem.degree() < 1) return true;
        int sigma = positive_root_count(rem);
        if (sigma == 0) return true;
        if (sigma == rem.degree()) {
            out = out * rem;
            return true;
        }
        if (auto root = find_rational_root(rem)) {
            RationalPoly lin{-*root, Rational(1)};
            rem = poly_div_exact(rem, lin);
            if (root->sign() > 0) out = out * lin;
            continue;
        }
        // Reflection probe: an even cofactor splits off via gcd with rem(-t).
        std::vector<Rational> refl(rem.coeffs());
        for (std::size_t j = 1; j < refl.size(); j += 2) refl[j] = -refl[j];
        RationalPoly common = poly_gcd(rem, RationalPoly(std::move(refl)));
        if (common.degree() >= 1 && common.degree() < rem.degree()) {
            RationalPoly part;
            if (!extract_positive_factor(common, part)) return false;
            out = out * part;
            if (!extract_positive_factor(poly_div_exact(rem, common), part)) return false;
            out = out * part;
            return true;
        }
        return false;
    }
}

// Maps a t-domain factor back to s (t = w^2 = -s^2), monic, with the
// s^delta axis factor attached.
RationalPoly map_back(const RationalPoly& nu, int delta) {
    std::vector<Rational> c(static_cast<std::size_t>(2 * nu.degree()) + 1, Rational(0));
    for (int j = 0; j <= nu.degree(); ++j) {
        Rational v = nu.coeff(j);
        if (j % 2 == 1) v = -v;
        c[static_cast<std::size_t>(2 * j)] = v;
    }
    RationalPoly w = RationalPoly(std::move(c)).monic();
    return w.shifted(delta);
}

}  // namespace

int axis_root_count_squarefree(const RationalPoly& q) {
    if (q.degree() < 1) return 0;
    AxisStructure st = axis_structure(q);
    return st.delta + 2 * positive_root_count(st.g2);
}

int half_plane_signature_squarefree(const RationalPoly& q) {
    if (q.degree() < 1) return 0;
    auto [u, v] = axis_split(q);
    if (u.is_zero() || v.is_zero()) {
        // All roots are axis roots or origin-symmetric pairs: signature 0.
        return 0;
    }
    // The common factor carries the axis roots and the origin-symmetric
    // off-axis pairs; both contribute zero to n_neg - n_pos.
    RationalPoly u1 = u, v1 = v;
    RationalPoly d = poly_gcd(u, v);
    if (d.degree() >= 1) {
        u1 = poly_div_exact(u, d);
        v1 = poly_div_exact(v, d);
    }
    if (u1.degree() <= 0 && v1.degree() <= 0) return 0;
    if (u1.degree() > v1.degree()) return -cauchy_index(u1, v1);
    return cauchy_index(v1, u1);
}

bool same_axis_roots(const RationalPoly& f, const RationalPoly& g) {
    int a = axis_root_count_squarefree(f);
    int b = axis_root_count_squarefree(g);
    if (a != b) return false;
    if (a == 0) return true;
    return axis_root_count_squarefree(poly_gcd(f, g)) == a;
}

}  // namespace detail

int axis_root_count(const RationalPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decompose(p))
        total += mult * detail::axis_root_count_squarefree(factor);
    return total;
}

RationalPoly imaginary_axis_factor(const RationalPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    RationalPoly result = RationalPoly::constant(Rational(1));
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        detail::AxisStructure st = detail::axis_structure(factor);
        RationalPoly nu;
        if (!detail::extract_positive_factor(st.g2, nu)) throw AxisFactorError();
        RationalPoly w = detail::map_back(nu, st.delta);
        if (w.degree() != detail::axis_root_count_squarefree(factor)) throw AxisFactorError();
        result = result * w.pow(mult);
    }
    return result;
}

Inertia inertia(const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    Inertia out;
    if (m.rows() == 0) return out;
    RationalPoly q = char_poly(m);
    for (const auto& [factor, mult] : squarefree_decompose(q)) {
        int zeros = detail::axis_root_count_squarefree(factor);
        int signature = detail::half_plane_signature_squarefree(factor);
        int off_axis = factor.degree() - zeros;
        if ((off_axis + signature) % 2 != 0) throw Error("inertia: inconsistent signature");
        int neg = (off_axis + signature) / 2;
        out.n_zero += mult * zeros;
        out.n_neg += mult * neg;
        out.n_pos += mult * (off_axis - neg);
    }
    return out;
}

ZeroPartClass zero_part_class(const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    ZeroPartClass out;
    out.p0 = RationalPoly::constant(Rational(1));
    if (m.rows() == 0) return out;
    out.p0 = imaginary_axis_factor(char_poly(m));
    if (out.p0.degree() == 0) return out;

    // ker p0(M) is the full generalized eigenspace of the axis spectrum
    // because p0 carries the multiplicities.
    RationalMatrix v = kernel_basis(eval_poly(out.p0, m));
    if (v.cols() != out.p0.degree()) throw Error("zero part: kernel dimension mismatch");
    auto coords = solve(v, m * v);
    if (!coords) throw Error("zero part: kernel is not invariant");
    out.invariant_factors = invariant_factors(*coords);
    return out;
}

namespace {

std::map<int, RationalPoly> squarefree_layers(const RationalPoly& d) {
    std::map<int, RationalPoly> out;
    for (const auto& [factor, mult] : squarefree_decompose(d)) out[mult] = factor;
    return out;
}

}  // namespace

bool zero_parts_similar(const RationalMatrix& m1, const RationalMatrix& m2) {
    if (!m1.is_square() || !m2.is_square()) throw NonSquareError();
    std::vector<RationalPoly> inv1 =
        m1.rows() ? invariant_factors(m1) : std::vector<RationalPoly>{};
    std::vector<RationalPoly> inv2 =
        m2.rows() ? invariant_factors(m2) : std::vector<RationalPoly>{};

    // Compare the axis parts of the invariant-factor chains, aligned from the
    // minimal polynomial downward; each squarefree multiplicity layer must
    // have identical axis roots.
    RationalPoly one = RationalPoly::constant(Rational(1));
    std::size_t depth = std::max(inv1.size(), inv2.size());
    for (std::size_t j = 0; j < depth; ++j) {
        const RationalPoly& d = j < inv1.size() ? inv1[inv1.size() - 1 - j] : one;
        const RationalPoly& e = j < inv2.size() ? inv2[inv2.size() - 1 - j] : one;
        auto la = squarefree_layers(d);
        auto lb = squarefree_layers(e);
        std::vector<int> mults;
        for (const auto& kv : la) mults.push_back(kv.first);
        for (const auto& kv : lb)
            if (!la.count(kv.first)) mults.push_back(kv.first);
        for (int mu : mults) {
            const RationalPoly& f = la.count(mu) ? la.at(mu) : one;
            const RationalPoly& g = lb.count(mu) ? lb.at(mu) : one;
            if (!detail::same_axis_roots(f, g)) return false;
        }
    }
    return true;
}

bool fully_similar(const RationalMatrix& m1, const RationalMatrix& m2) {
    if (!m1.is_square() || !m2.is_square()) return false;
    if (m1.rows() != m2.rows()) return false;
    return invariant_factors(m1) == invariant_factors(m2);
}

}  // namespace lcs
