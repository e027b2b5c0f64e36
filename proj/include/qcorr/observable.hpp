#pragma once

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eig.hpp"

namespace qcorr {

// A measurable quantity: Hermitian matrix with its eigendecomposition cached
// at construction (eigenvalues descending, orthonormal eigenvector columns).
class Observable {
public:
    explicit Observable(ComplexMatrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<double>& eigenvalues() const { return eig_.values; }
    const ComplexMatrix& eigenvectors() const { return eig_.vectors; }
    const Eigendecomposition& decomposition() const { return eig_; }

private:
    ComplexMatrix matrix_;
    Eigendecomposition eig_;
};

} // namespace qcorr
