#pragma once

#include <cassert>
#include <vector>

#include "qsymp/error.hpp"
#include "qsymp/rational.hpp"

namespace qsymp {

/// Dense exact matrix over the rationals. Row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0)
                        r(i, j) += x * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator-() const
    {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = -a_[i];
        return r;
    }

    Matrix operator*(const Rational& c) const
    {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = a_[i] * c;
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const
    {
        assert(v.size() == cols_);
        std::vector<Rational> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<Rational> column(std::size_t j) const
    {
        std::vector<Rational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<Rational>& c)
    {
        assert(c.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = c[i];
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.set_column(j, cols[j]);
        return m;
    }

    Matrix columns_subset(const std::vector<std::size_t>& idx) const
    {
        Matrix m(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            m.set_column(j, column(idx[j]));
        return m;
    }

    /// Horizontal concatenation [this | o].
    Matrix hcat(const Matrix& o) const
    {
        assert(rows_ == o.rows_);
        Matrix m(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j)
                m(i, cols_ + j) = o(i, j);
        }
        return m;
    }

    /// In-place reduced row echelon form; pivots chosen leftmost-first.
    /// Returns the pivot column of each nonzero row, in order.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0)
                ++sel;
            if (sel == rows_)
                continue;
            swap_rows(sel, row);
            const Rational inv = Rational(1) / (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j)
                (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col) == 0)
                    continue;
                const Rational f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        Matrix m = *this;
        return m.rref().size();
    }

    Rational determinant() const
    {
        assert(rows_ == cols_);
        Matrix m = *this;
        Rational det = 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t sel = col;
            while (sel < rows_ && m(sel, col) == 0)
                ++sel;
            if (sel == rows_)
                return Rational(0);
            if (sel != col) {
                m.swap_rows(sel, col);
                det = -det;
            }
            det *= m(col, col);
            const Rational inv = Rational(1) / m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col) == 0)
                    continue;
                const Rational f = m(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    Matrix inverse() const
    {
        if (rows_ != cols_)
            throw NotInvertible();
        Matrix aug = hcat(identity(rows_));
        auto pivots = aug.rref();
        if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() != rows_ - 1) ||
            (rows_ > 0 && pivots.front() != 0))
            throw NotInvertible();
        for (std::size_t i = 0; i < rows_; ++i)
            if (pivots[i] != i)
                throw NotInvertible();
        Matrix inv(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                inv(i, j) = aug(i, rows_ + j);
        return inv;
    }

    /// Canonical nullspace basis: one column per free variable (ascending),
    /// with entry 1 at the free index and back-substituted pivot entries.
    Matrix kernel_basis() const
    {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_pivot[j])
                free_cols.push_back(j);
        Matrix k(cols_, free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            const std::size_t fc = free_cols[t];
            k(fc, t) = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                k(pivots[r], t) = -m(r, fc);
        }
        return k;
    }

    /// One exact solution of Ax = b (free variables set to 0).
    /// Throws SingularForm when the system is inconsistent.
    std::vector<Rational> solve(const std::vector<Rational>& b) const
    {
        assert(b.size() == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_)
            throw SingularForm();
        std::vector<Rational> x(cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = aug(r, cols_);
        return x;
    }

private:
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace qsymp
