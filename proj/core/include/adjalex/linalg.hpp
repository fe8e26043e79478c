#pragma once

#include <vector>

#include "adjalex/exactpoly.hpp"

namespace adjalex {

// Dense matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);
    Matrix operator*(const Matrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Echelon {
    Matrix reduced;                  // reduced row echelon form (nonzero rows only)
    std::vector<std::size_t> pivots; // pivot column of each row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of the right null space, one vector per free column, in rref form.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

// Incremental row space: tracks a reduced basis, answers membership and
// extends by new vectors.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // returns true if v was independent (and adds it)
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> piv_;
    void reduce(std::vector<Rational>& v) const;
};

}  // namespace adjalex
