#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

// Dense matrix of exact rationals, row-major. Zero-sized dimensions are fully
// supported (0x0, n x 0, 0 x m) so that empty controllable or uncontrollable
// blocks need no special casing.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return e_[idx(i, j)]; }

    bool is_zero() const;
    RationalMatrix transpose() const;
    RationalMatrix operator-() const;

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    RationalMatrix block(int i0, int j0, int r, int c) const;
    void set_block(int i0, int j0, const RationalMatrix& m);
    RationalMatrix row(int i) const { return block(i, 0, 1, cols_); }
    RationalMatrix column(int j) const { return block(0, j, rows_, 1); }

    static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
    static RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
    static RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string str() const;

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace lcs
