#include "lcs/linalg.hpp"

#include <algorithm>

#include "lcs/errors.hpp"

namespace lcs {

RrefResult rref_with_transform(const RationalMatrix& m) {
    RationalMatrix r = m;
    RationalMatrix e = RationalMatrix::identity(m.rows());
    std::vector<int> pivots;

    int pr = 0;
    for (int j = 0; j < m.cols() && pr < m.rows(); ++j) {
        int pivot_row = -1;
        for (int i = pr; i < m.rows(); ++i)
            if (!r(i, j).is_zero()) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        r.swap_rows(pr, pivot_row);
        e.swap_rows(pr, pivot_row);
        for (int i = pr + 1; i < m.rows(); ++i) {
            if (r(i, j).is_zero()) continue;
            Rational f = r(i, j) / r(pr, j);
            for (int c = 0; c < m.cols(); ++c) r(i, c) -= f * r(pr, c);
            for (int c = 0; c < m.rows(); ++c) e(i, c) -= f * e(pr, c);
        }
        pivots.push_back(j);
        ++pr;
    }

    // Back-substitution: unit pivots, zeros above.
    for (int t = static_cast<int>(pivots.size()) - 1; t >= 0; --t) {
        int j = pivots[static_cast<std::size_t>(t)];
        Rational inv = r(t, j).inverse();
        for (int c = 0; c < m.cols(); ++c) r(t, c) *= inv;
        for (int c = 0; c < m.rows(); ++c) e(t, c) *= inv;
        for (int i = 0; i < t; ++i) {
            if (r(i, j).is_zero()) continue;
            Rational f = r(i, j);
            for (int c = 0; c < m.cols(); ++c) r(i, c) -= f * r(t, c);
            for (int c = 0; c < m.rows(); ++c) e(i, c) -= f * e(t, c);
        }
    }
    return {std::move(r), std::move(e), std::move(pivots)};
}

int rank(const RationalMatrix& m) {
    return static_cast<int>(rref_with_transform(m).pivot_cols.size());
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
    RrefResult rr = rref_with_transform(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : rr.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

    int nullity = m.cols() - static_cast<int>(rr.pivot_cols.size());
    RationalMatrix basis(m.cols(), nullity);
    int col = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, col) = Rational(1);
        for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
            basis(rr.pivot_cols[t], col) = -rr.R(static_cast<int>(t), f);
        ++col;
    }
    return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw Error("solve: row mismatch");
    RrefResult rr = rref_with_transform(a);
    RationalMatrix rhs = rr.E * b;
    int rk = static_cast<int>(rr.pivot_cols.size());
    for (int i = rk; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!rhs(i, j).is_zero()) return std::nullopt;
    RationalMatrix x(a.cols(), b.cols());
    for (int t = 0; t < rk; ++t)
        for (int j = 0; j < b.cols(); ++j) x(rr.pivot_cols[static_cast<std::size_t>(t)], j) = rhs(t, j);
    return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    RrefResult rr = rref_with_transform(m);
    if (static_cast<int>(rr.pivot_cols.size()) != m.rows()) throw SingularMatrixError();
    return rr.E;
}

bool is_invertible(const RationalMatrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

RationalPoly char_poly(const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    int n = m.rows();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = Rational(1);
    if (n == 0) return RationalPoly(std::move(c));

    RationalMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        Rational ck = -(tr / Rational(k));
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            RationalMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted(i, i) += ck;
            mk = m * shifted;
        }
    }
    return RationalPoly(std::move(c));
}

RationalMatrix eval_poly(const RationalPoly& p, const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    int n = m.rows();
    RationalMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        Rational ci = p.coeff(i);
        for (int d = 0; d < n; ++d) acc(d, d) += ci;
    }
    return acc;
}

RationalMatrix companion_matrix(const RationalPoly& p) {
    if (p.degree() < 1) throw Error("companion matrix needs degree >= 1");
    if (!p.is_monic()) throw Error("companion matrix needs a monic polynomial");
    int d = p.degree();
    RationalMatrix c(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = Rational(1);
    for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i);
    return c;
}

namespace {

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

// Smith normal form over Q[s]: pivot = nonzero entry of minimal degree, ties
// broken row-major; reduce its row and column by euclidean division, restart
// while remainders appear, then force divisibility over the trailing block.
std::vector<RationalPoly> smith_diagonal(PolyMatrix a) {
    int n = static_cast<int>(a.size());
    std::vector<RationalPoly> diag;
    for (int t = 0; t < n; ++t) {
        for (;;) {
            int bi = -1, bj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    if (a[i][j].is_zero()) continue;
                    if (bi < 0 || a[i][j].degree() < a[bi][bj].degree()) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) return diag;  // trailing block is zero
            std::swap(a[bi], a[t]);
            if (bj != t)
                for (int i = 0; i < n; ++i) std::swap(a[i][bj], a[i][t]);

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (a[i][t].is_zero()) continue;
                auto [q, r] = poly_divmod(a[i][t], a[t][t]);
                for (int j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!r.is_zero()) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                auto [q, r] = poly_divmod(a[t][j], a[t][t]);
                for (int i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            bool divides_all = true;
            for (int i = t + 1; i < n && divides_all; ++i)
                for (int j = t + 1; j < n && divides_all; ++j) {
                    if (a[i][j].is_zero()) continue;
                    auto [q, r] = poly_divmod(a[i][j], a[t][t]);
                    (void)q;
                    if (!r.is_zero()) {
                        for (int c = t; c < n; ++c) a[t][c] = a[t][c] + a[i][c];
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
        diag.push_back(a[t][t].monic());
    }
    return diag;
}

}  // namespace

std::vector<RationalPoly> invariant_factors(const RationalMatrix& m) {
    if (!m.is_square()) throw NonSquareError();
    int n = m.rows();
    PolyMatrix a(static_cast<std::size_t>(n), std::vector<RationalPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> c{-m(i, j)};
            if (i == j) c.push_back(Rational(1));
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = RationalPoly(std::move(c));
        }
    std::vector<RationalPoly> diag = smith_diagonal(std::move(a));
    std::vector<RationalPoly> out;
    for (auto& d : diag)
        if (d.degree() >= 1) out.push_back(std::move(d));
    return out;
}

bool RankTracker::insert(std::vector<Rational> v) {
    for (const Row& row : rows_) {
        Rational& c = v[static_cast<std::size_t>(row.pivot)];
        if (c.is_zero()) continue;
        Rational f = c;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row.v[i];
    }
    int pivot = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) return false;
    Rational inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back({pivot, std::move(v)});
    return true;
}

}  // namespace lcs
