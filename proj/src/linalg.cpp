#include "glmn/linalg.hpp"

#include "glmn/errors.hpp"

#include <algorithm>

namespace glmn {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw ParameterError("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0)
                    r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ParameterError("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix r = *this;
    for (auto& v : r.data_)
        v *= s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

Matrix Matrix::transpose() const
{
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::column_block(std::size_t c0, std::size_t c1) const
{
    Matrix r(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            r.at(i, j - c0) = at(i, j);
    return r;
}

Matrix Matrix::hconcat(const Matrix& o) const
{
    if (rows_ != o.rows_)
        throw ParameterError("hconcat: row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const
{
    Matrix r = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t p = row;
        while (p < rows_ && r.at(p, c) == 0)
            ++p;
        if (p == rows_)
            continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(r.at(p, j), r.at(row, j));
        const Rational inv = 1 / r.at(row, c);
        for (std::size_t j = c; j < cols_; ++j)
            r.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || r.at(i, c) == 0)
                continue;
            const Rational f = r.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (r.at(row, j) != 0)
                    r.at(i, j) -= f * r.at(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    if (pivots)
        *pivots = std::move(piv);
    return r;
}

std::size_t Matrix::rank() const
{
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::kernel() const
{
    std::vector<std::size_t> piv;
    const Matrix r = rref(&piv);
    std::vector<char> is_pivot(cols_, 0);
    for (auto c : piv)
        is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k.at(free_cols[f], f) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            k.at(piv[i], f) = -r.at(i, free_cols[f]);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ParameterError("solve: row mismatch");
    std::vector<std::size_t> piv;
    const Matrix r = a.hconcat(b).rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] >= a.cols())
            return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(piv[i], j) = r.at(i, a.cols() + j);
    return x;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (a == 0)
        return;
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cols_data_(cols)
{
}

void SparseMatrix::set_column(std::size_t c, SparseVector v)
{
    for (auto it = v.begin(); it != v.end();)
        it = it->second == 0 ? v.erase(it) : std::next(it);
    cols_data_.at(c) = std::move(v);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v)
{
    axpy(cols_data_.at(c), 1, SparseVector{{r, v}});
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const
{
    const auto& col = cols_data_.at(c);
    auto it = col.find(r);
    return it == col.end() ? Rational(0) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector y;
    for (const auto& [c, v] : x)
        axpy(y, v, cols_data_.at(c));
    return y;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const
{
    if (cols_ != o.rows_)
        throw ParameterError("sparse product: shape mismatch");
    SparseMatrix r(rows_, o.cols_);
    for (std::size_t c = 0; c < o.cols_; ++c)
        r.cols_data_[c] = apply(o.cols_data_[c]);
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ParameterError("sparse sum: shape mismatch");
    SparseMatrix r = *this;
    for (std::size_t c = 0; c < cols_; ++c)
        axpy(r.cols_data_[c], 1, o.cols_data_[c]);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Rational& s) const
{
    SparseMatrix r(rows_, cols_);
    if (s == 0)
        return r;
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [i, v] : cols_data_[c])
            r.cols_data_[c].emplace(i, v * s);
    return r;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(cols_data_.begin(), cols_data_.end(),
                       [](const SparseVector& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : cols_data_)
        n += c.size();
    return n;
}

SparseMatrix SparseMatrix::direct_sum(const SparseMatrix& o) const
{
    SparseMatrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        r.cols_data_[c] = cols_data_[c];
    for (std::size_t c = 0; c < o.cols_; ++c)
        for (const auto& [i, v] : o.cols_data_[c])
            r.cols_data_[cols_ + c].emplace(rows_ + i, v);
    return r;
}

Matrix SparseMatrix::to_dense() const
{
    Matrix m(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [i, v] : cols_data_[c])
            m.at(i, c) = v;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m)
{
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0)
                s.cols_data_[j].emplace(i, m.at(i, j));
    return s;
}

std::size_t SparseMatrix::rank() const
{
    // Column elimination keyed by leading (smallest) row index.
    std::map<std::size_t, SparseVector> basis;
    for (const auto& col : cols_data_) {
        SparseVector v = col;
        while (!v.empty()) {
            const std::size_t lead = v.begin()->first;
            auto it = basis.find(lead);
            if (it == basis.end()) {
                basis.emplace(lead, std::move(v));
                break;
            }
            const Rational f = v.begin()->second / it->second.begin()->second;
            axpy(v, -f, it->second);
        }
    }
    return basis.size();
}

} // namespace glmn
