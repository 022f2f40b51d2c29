#pragma once

#include "glmn/arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace glmn {

/// Dense exact rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    bool operator==(const Matrix& o) const;

    bool is_zero() const;
    Matrix transpose() const;
    // Columns [c0, c1) as a new matrix.
    Matrix column_block(std::size_t c0, std::size_t c1) const;
    Matrix hconcat(const Matrix& o) const;

    std::size_t rank() const;
    // Columns form a basis of the null space.
    Matrix kernel() const;
    // Reduced row echelon form; pivot column indices written to pivots.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Solves A X = B; nullopt when inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Square-or-rectangular sparse matrix stored by columns.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const SparseVector& column(std::size_t c) const { return cols_data_[c]; }
    void set_column(std::size_t c, SparseVector v);
    void add(std::size_t r, std::size_t c, const Rational& v);
    Rational get(std::size_t r, std::size_t c) const;

    SparseVector apply(const SparseVector& x) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& s) const;
    bool operator==(const SparseMatrix& o) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    // Block-diagonal direct sum.
    SparseMatrix direct_sum(const SparseMatrix& o) const;

    Matrix to_dense() const;
    static SparseMatrix from_dense(const Matrix& m);

    // Exact rank by sparse elimination on a copy.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> cols_data_;
};

} // namespace glmn
