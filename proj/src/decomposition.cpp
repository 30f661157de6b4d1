#include "lcs/decomposition.hpp"

#include <numeric>

#include "lcs/errors.hpp"

namespace lcs {

ControlSystem apply_witness(const ControlSystem& sys, const FeedbackWitness& w) {
    if (w.O.rows() != sys.n || !w.O.is_square() || w.Q.rows() != sys.m || !w.Q.is_square() ||
        w.L.rows() != sys.m || w.L.cols() != sys.n)
        throw Error("witness dimensions do not match the system");
    if (!is_invertible(w.O) || !is_invertible(w.Q)) throw SingularWitnessError();
    RationalMatrix o_inv = inverse(w.O);
    return ControlSystem(o_inv * sys.A * w.O + o_inv * sys.B * w.L, o_inv * sys.B * w.Q);
}

FeedbackWitness compose(const FeedbackWitness& w1, const FeedbackWitness& w2) {
    return {w1.O * w2.O, w1.Q * w2.Q, w1.L * w2.O + w1.Q * w2.L};
}

FeedbackWitness inverse(const FeedbackWitness& w) {
    RationalMatrix o_inv = inverse(w.O);
    RationalMatrix q_inv = inverse(w.Q);
    return {o_inv, q_inv, -(q_inv * w.L * o_inv)};
}

bool witness_maps(const ControlSystem& from, const ControlSystem& to, const FeedbackWitness& w) {
    if (from.n != to.n || from.m != to.m) return false;
    if (!is_invertible(w.O) || !is_invertible(w.Q)) return false;
    return apply_witness(from, w) == to;
}

KalmanSplit kalman_split(const ControlSystem& sys) {
    ChainSelection sel = select_chains(sys);
    int n = sys.n, k = sel.k;

    RationalMatrix t(n, k + (n - k));
    t.set_block(0, 0, sel.scan_basis);
    // Complete with standard basis vectors, lowest index first.
    RankTracker tracker;
    for (int c = 0; c < k; ++c) {
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = sel.scan_basis(i, c);
        tracker.insert(std::move(v));
    }
    int col = k;
    for (int e = 0; e < n && col < n; ++e) {
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(e)] = Rational(1);
        if (tracker.insert(std::move(v))) {
            t(e, col) = Rational(1);
            ++col;
        }
    }
    if (col != n) throw Error("kalman split: basis completion failed");

    RationalMatrix t_inv = inverse(t);
    RationalMatrix a_hat = t_inv * sys.A * t;
    RationalMatrix b_hat = t_inv * sys.B;

    KalmanSplit split;
    split.k = k;
    split.T = t;
    split.A11 = a_hat.block(0, 0, k, k);
    split.A12 = a_hat.block(0, k, k, n - k);
    split.A22 = a_hat.block(k, k, n - k, n - k);
    split.B1 = b_hat.block(0, 0, k, sys.m);
    if (!a_hat.block(k, 0, n - k, k).is_zero() || !b_hat.block(k, 0, n - k, sys.m).is_zero())
        throw Error("kalman split: controllable subspace is not invariant");
    return split;
}

RationalMatrix canonical_shift_blocks(const std::vector<int>& p) {
    int k = std::accumulate(p.begin(), p.end(), 0);
    RationalMatrix c(k, k);
    int off = 0;
    for (int pi : p) {
        for (int j = 0; j + 1 < pi; ++j) c(off + j, off + j + 1) = Rational(1);
        off += pi;
    }
    return c;
}

RationalMatrix canonical_input_blocks(const std::vector<int>& p, int m) {
    int k = std::accumulate(p.begin(), p.end(), 0);
    RationalMatrix d(k, m);
    int off = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int pi = p[i];
        if (pi == 0) break;
        d(off + pi - 1, static_cast<int>(i)) = Rational(1);
        off += pi;
    }
    return d;
}

BrunovskyNormalization brunovsky_normalize(const RationalMatrix& a11, const RationalMatrix& b1) {
    if (!a11.is_square() || b1.rows() != a11.rows()) throw Error("malformed controllable block");
    int k = a11.rows();
    int m = b1.cols();
    BrunovskyNormalization out;
    if (k == 0) {
        out.witness = FeedbackWitness::identity(0, m);
        out.p.assign(static_cast<std::size_t>(m), 0);
        return out;
    }

    ControlSystem blk(a11, b1);
    ChainSelection sel = select_chains(blk);
    if (sel.k != k) throw NotControllableError();

    // p sorted nonincreasing; r = number of selected chains = rank B1.
    std::vector<int> p;
    for (int i : sel.order) p.push_back(sel.lengths[static_cast<std::size_t>(i)]);
    int r = 0;
    while (r < m && p[static_cast<std::size_t>(r)] > 0) ++r;

    // Chain matrix in head-first order: A^{p1-1} b_{o1}, ..., b_{o1}, A^{p2-1} b_{o2}, ...
    RationalMatrix chains(k, k);
    std::vector<int> offset(static_cast<std::size_t>(r), 0);
    {
        int col = 0;
        for (int i = 0; i < r; ++i) {
            offset[static_cast<std::size_t>(i)] = col;
            int src = sel.order[static_cast<std::size_t>(i)];
            int pi = p[static_cast<std::size_t>(i)];
            RationalMatrix v = b1.column(src);
            std::vector<RationalMatrix> chain{v};
            for (int j = 1; j < pi; ++j) chain.push_back(a11 * chain.back());
            for (int j = pi - 1; j >= 0; --j) chains.set_block(0, col++, chain[static_cast<std::size_t>(j)]);
        }
    }
    RationalMatrix chains_inv = inverse(chains);

    // s_{i,j} = q_i A^{j-1}, q_i dual to the head of chain i. Stacked, these
    // are the rows of the new coordinates.
    RationalMatrix s(k, k);
    RationalMatrix w_rows(m, k);   // rows 1..r hold q_i A^{p_i}
    RationalMatrix gamma(m, m);    // input coupling at the block-end rows
    {
        int row = 0;
        for (int i = 0; i < r; ++i) {
            int pi = p[static_cast<std::size_t>(i)];
            RationalMatrix q = chains_inv.row(offset[static_cast<std::size_t>(i)]);
            for (int j = 0; j < pi; ++j) {
                s.set_block(row++, 0, q);
                q = q * a11;
            }
            w_rows.set_block(i, 0, q);            // q_i A^{p_i}
            RationalMatrix qend = s.row(row - 1);  // q_i A^{p_i - 1}
            gamma.set_block(i, 0, qend * b1);
        }
        // Unselected channels pass through unchanged.
        int free_row = r;
        for (int l = 0; l < m; ++l) {
            bool selected = false;
            for (int i = 0; i < r; ++i) selected |= (sel.order[static_cast<std::size_t>(i)] == l);
            if (!selected) gamma(free_row++, l) = Rational(1);
        }
    }

    RationalMatrix o = inverse(s);
    RationalMatrix q_tr = inverse(gamma);
    RationalMatrix l_tr = -(q_tr * w_rows * o);

    out.witness = {o, q_tr, l_tr};
    out.p = p;

    ControlSystem target(canonical_shift_blocks(p), canonical_input_blocks(p, m));
    if (apply_witness(blk, out.witness) != target)
        throw Error("brunovsky normalization failed its substitution check");
    return out;
}

std::pair<RationalMatrix, RationalMatrix> decouple_cross_block(const RationalMatrix& a11,
                                                               const RationalMatrix& a12,
                                                               const RationalMatrix& a22,
                                                               const RationalMatrix& b1) {
    int k = a11.rows();
    int w = a22.rows();
    int m = b1.cols();
    if (k == 0 || w == 0) return {RationalMatrix(k, w), RationalMatrix(m, w)};

    // Unknowns: vec(Z) row-major (k*w), then vec(W) row-major (m*w).
    int unknowns = k * w + m * w;
    RationalMatrix coeff(k * w, unknowns);
    RationalMatrix rhs(k * w, 1);
    auto zidx = [w](int i, int j) { return i * w + j; };
    auto widx = [k, w](int i, int j) { return k * w + i * w + j; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < w; ++j) {
            int row = zidx(i, j);
            for (int l = 0; l < k; ++l) coeff(row, zidx(l, j)) += a11(i, l);
            for (int l = 0; l < w; ++l) coeff(row, zidx(i, l)) -= a22(l, j);
            for (int l = 0; l < m; ++l) coeff(row, widx(l, j)) += b1(i, l);
            rhs(row, 0) = -a12(i, j);
        }
    auto sol = solve(coeff, rhs);
    if (!sol) throw InconsistentSystemError();

    RationalMatrix z(k, w), wmat(m, w);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < w; ++j) z(i, j) = (*sol)(zidx(i, j), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < w; ++j) wmat(i, j) = (*sol)(widx(i, j), 0);
    return {z, wmat};
}

CanonicalForm canonical_form(const ControlSystem& sys) {
    KalmanSplit split = kalman_split(sys);
    int n = sys.n, m = sys.m, k = split.k;

    FeedbackWitness w_split{split.T, RationalMatrix::identity(m), RationalMatrix(m, n)};

    auto [z, w] = decouple_cross_block(split.A11, split.A12, split.A22, split.B1);
    RationalMatrix o_dec = RationalMatrix::identity(n);
    o_dec.set_block(0, k, z);
    RationalMatrix l_dec(m, n);
    l_dec.set_block(0, k, w);
    FeedbackWitness w_dec{o_dec, RationalMatrix::identity(m), l_dec};

    BrunovskyNormalization norm = brunovsky_normalize(split.A11, split.B1);
    FeedbackWitness w_norm{RationalMatrix::block_diag(norm.witness.O, RationalMatrix::identity(n - k)),
                           norm.witness.Q,
                           RationalMatrix::hstack(norm.witness.L, RationalMatrix(m, n - k))};

    CanonicalForm cf;
    cf.k = k;
    cf.p = norm.p;
    cf.C = canonical_shift_blocks(cf.p);
    cf.D = canonical_input_blocks(cf.p, m);
    cf.M = split.A22;
    cf.witness = compose(compose(w_split, w_dec), w_norm);

    if (apply_witness(sys, cf.witness) != canonical_system(cf))
        throw Error("canonical form failed its substitution check");
    return cf;
}

ControlSystem canonical_system(const CanonicalForm& cf) {
    return ControlSystem(RationalMatrix::block_diag(cf.C, cf.M),
                         RationalMatrix::vstack(cf.D, RationalMatrix(cf.M.rows(), cf.D.cols())));
}

}  // namespace lcs
