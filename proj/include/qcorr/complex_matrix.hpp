#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcorr {

using cdouble = std::complex<double>;

// Dense row-major complex matrix. Sized for the small dimensions this
// library works at (d <= 64); no attempt at sparsity or blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    // Row-major literal, rows*cols entries.
    static ComplexMatrix from_rows(std::size_t rows, std::size_t cols,
                                   std::initializer_list<cdouble> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    bool all_finite() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cdouble scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(cdouble scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(ComplexMatrix m, cdouble scale) { return m *= scale; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; dimensions multiply.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise |a - b|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qcorr
