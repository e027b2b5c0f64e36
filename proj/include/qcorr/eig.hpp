#pragma once

#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Spectral decomposition of a Hermitian matrix. Eigenvalues are real and
// sorted descending; the matching eigenvectors are the columns of `vectors`.
struct Eigendecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;

    ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices, adequate for
// the small dimensions used here (hard cap d = 64). Sweeps run until the
// off-diagonal Frobenius mass drops below 1e-12 (relative to the matrix
// scale). Within a degenerate cluster (eigenvalue gap < 1e-9) the vectors are
// re-orthonormalized by modified Gram-Schmidt in discovery order, which keeps
// results deterministic for snapshot tests.
//
// Throws NotHermitian if max|M - M^dagger| > 1e-10, DimensionMismatch for
// non-square input or d > 64.
Eigendecomposition hermitian_eig(const ComplexMatrix& m);

} // namespace qcorr
