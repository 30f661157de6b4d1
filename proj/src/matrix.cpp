#include "lcs/matrix.hpp"

#include <sstream>
#include <utility>

namespace lcs {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = static_cast<int>(r.size());
        if (static_cast<int>(r.size()) != cols_) throw Error("ragged initializer list");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
    RationalMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
    RationalMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
    RationalMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int l = 0; l < a.cols_; ++l) {
            const Rational& ail = a(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) m(i, j) += ail * b(l, j);
        }
    return m;
}

RationalMatrix operator*(const Rational& a, const RationalMatrix& b) {
    RationalMatrix m(b.rows_, b.cols_);
    for (std::size_t i = 0; i < b.e_.size(); ++i) m.e_[i] = a * b.e_[i];
    return m;
}

RationalMatrix RationalMatrix::block(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || r < 0 || c < 0 || i0 + r > rows_ || j0 + c > cols_)
        throw Error("block out of range");
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
}

void RationalMatrix::set_block(int i0, int j0, const RationalMatrix& m) {
    if (i0 < 0 || j0 < 0 || i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
        throw Error("block out of range");
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_) throw Error("hstack row mismatch");
    RationalMatrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.cols_) throw Error("vstack column mismatch");
    RationalMatrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

RationalMatrix RationalMatrix::block_diag(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

void RationalMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void RationalMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace lcs
