#pragma once

#include <vector>

#include "tamearith/cyclotomic.hpp"
#include "tamearith/error.hpp"

namespace tamearith {

/// Dense row-major matrix over an exact field or over intervals.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, T fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n, T(0));
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& other) const {
        require(cols_ == other.rows_, errc::internal, "matrix product shape mismatch");
        Matrix out(rows_, other.cols_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& other) const {
        require(rows_ == other.rows_ && cols_ == other.cols_, errc::internal, "matrix sum shape");
        Matrix out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        require(rows_ == other.rows_ && cols_ == other.cols_, errc::internal, "matrix diff shape");
        Matrix out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using CycMatrix = Matrix<CyclotomicNumber>;
using RatMatrix = Matrix<Rat>;

/// Determinant by fraction-producing Gaussian elimination (exact field ops).
CyclotomicNumber det(const CycMatrix& m);
Rat det(const RatMatrix& m);

/// Rank by Gaussian elimination.
size_t rank(const CycMatrix& m);

/// Inverse; throws Singular if not invertible.
CycMatrix inverse(const CycMatrix& m);

/// Basis of the right kernel {v : m v = 0}, as columns.
CycMatrix kernel_basis(const CycMatrix& m);

/// Solve m x = rhs (rhs may have several columns); throws Singular when the
/// system is inconsistent or the solution is not unique.
CycMatrix solve(const CycMatrix& m, const CycMatrix& rhs);

/// Reduced row echelon form; returns pivot column indices.
std::vector<size_t> rref(CycMatrix& m);

CycMatrix transpose(const CycMatrix& m);
CycMatrix conjugate_transpose(const CycMatrix& m);

/// Inverse of a rational matrix; throws Singular.
RatMatrix inverse(const RatMatrix& m);

} // namespace tamearith
