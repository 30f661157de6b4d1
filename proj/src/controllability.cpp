#include "lcs/controllability.hpp"

#include <algorithm>
#include <numeric>

namespace lcs {

namespace {

std::vector<Rational> column_vector(const RationalMatrix& m, int j) {
    std::vector<Rational> v(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) v[static_cast<std::size_t>(i)] = m(i, j);
    return v;
}

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(static_cast<std::size_t>(a.rows()), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero())
                out[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace

RationalMatrix controllability_matrix(const ControlSystem& sys) {
    RationalMatrix out(sys.n, sys.n * sys.m);
    RationalMatrix blockm = sys.B;
    for (int j = 0; j < sys.n; ++j) {
        out.set_block(0, j * sys.m, blockm);
        if (j + 1 < sys.n) blockm = sys.A * blockm;
    }
    return out;
}

int kalman_rank(const ControlSystem& sys) { return rank(controllability_matrix(sys)); }

std::vector<int> r_sequence(const ControlSystem& sys) {
    std::vector<int> r(static_cast<std::size_t>(sys.n), 0);
    RankTracker tracker;
    std::vector<std::vector<Rational>> cur(static_cast<std::size_t>(sys.m));
    for (int i = 0; i < sys.m; ++i) cur[static_cast<std::size_t>(i)] = column_vector(sys.B, i);
    for (int j = 0; j < sys.n; ++j) {
        int inc = 0;
        for (auto& col : cur) {
            if (tracker.insert(col)) ++inc;
            if (j + 1 < sys.n) col = mat_vec(sys.A, col);
        }
        r[static_cast<std::size_t>(j)] = inc;
    }
    return r;
}

ChainSelection select_chains(const ControlSystem& sys) {
    ChainSelection sel;
    sel.lengths.assign(static_cast<std::size_t>(sys.m), 0);

    RankTracker tracker;
    std::vector<std::vector<Rational>> cur(static_cast<std::size_t>(sys.m));
    for (int i = 0; i < sys.m; ++i) cur[static_cast<std::size_t>(i)] = column_vector(sys.B, i);
    std::vector<std::vector<Rational>> kept;

    for (int j = 0; j < sys.n; ++j) {
        for (int i = 0; i < sys.m; ++i) {
            auto& len = sel.lengths[static_cast<std::size_t>(i)];
            // Once a column's vector is dropped, its whole tail is dropped.
            if (len != j) continue;
            if (tracker.insert(cur[static_cast<std::size_t>(i)])) {
                len = j + 1;
                kept.push_back(cur[static_cast<std::size_t>(i)]);
            }
        }
        if (j + 1 < sys.n)
            for (int i = 0; i < sys.m; ++i)
                if (sel.lengths[static_cast<std::size_t>(i)] == j + 1)
                    cur[static_cast<std::size_t>(i)] = mat_vec(sys.A, cur[static_cast<std::size_t>(i)]);
    }

    sel.k = static_cast<int>(kept.size());
    sel.scan_basis = RationalMatrix(sys.n, sel.k);
    for (int c = 0; c < sel.k; ++c)
        for (int i = 0; i < sys.n; ++i)
            sel.scan_basis(i, c) = kept[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];

    sel.order.resize(static_cast<std::size_t>(sys.m));
    std::iota(sel.order.begin(), sel.order.end(), 0);
    std::stable_sort(sel.order.begin(), sel.order.end(), [&](int a, int b) {
        return sel.lengths[static_cast<std::size_t>(a)] > sel.lengths[static_cast<std::size_t>(b)];
    });
    return sel;
}

std::vector<int> p_indices(const ControlSystem& sys) {
    ChainSelection sel = select_chains(sys);
    std::vector<int> p;
    p.reserve(static_cast<std::size_t>(sys.m));
    for (int i : sel.order) p.push_back(sel.lengths[static_cast<std::size_t>(i)]);
    return p;
}

BrunovskySequences brunovsky_sequences(const ControlSystem& sys) {
    BrunovskySequences b;
    b.r = r_sequence(sys);
    b.p = p_indices(sys);
    b.k = std::accumulate(b.r.begin(), b.r.end(), 0);
    return b;
}

std::vector<int> conjugate_partition(const std::vector<int>& r, int m) {
    std::vector<int> p(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= m; ++i)
        for (int rj : r)
            if (rj >= i) ++p[static_cast<std::size_t>(i - 1)];
    return p;
}

}  // namespace lcs
