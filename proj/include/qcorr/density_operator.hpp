#pragma once

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eig.hpp"

namespace qcorr {

enum class Side { A, B };

// A quantum state: Hermitian, unit-trace, positive semidefinite matrix.
// Validation happens once at construction and either passes or raises;
// small negative eigenvalues are tolerated down to -1e-10 but never clamped.
// Instances are immutable and safe to share across threads.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    // Spectrum computed during validation; eigenvalues descending.
    const Eigendecomposition& spectrum() const { return spectrum_; }

private:
    ComplexMatrix matrix_;
    Eigendecomposition spectrum_;
};

// Reduced state of one side of a bipartite system with dims d_a * d_b.
DensityOperator partial_trace(const DensityOperator& s, std::size_t dim_a, std::size_t dim_b,
                              Side keep);

// (U (x) V) S (U (x) V)^dagger for single-qubit unitaries U, V.
DensityOperator apply_local_unitary(const DensityOperator& s, const ComplexMatrix& u,
                                    const ComplexMatrix& v);

// tr(S^2); equals 1 (within 1e-10) exactly for pure states.
double purity(const DensityOperator& s);

} // namespace qcorr
