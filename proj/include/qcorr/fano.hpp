#pragma once

#include "qcorr/density_operator.hpp"
#include "qcorr/real3.hpp"

namespace qcorr {

// Bloch-form coefficients of a two-qubit state in the fixed (X, Y, Z) Pauli
// order: local Bloch vectors n (side A) and s (side B), correlation tensor
// T with t_kl = tr[S (Pauli_k (x) Pauli_l)], and the derived correlation
// matrix C = T - n s^T that governs Pearson correlations of dichotomic
// observable pairs.
struct FanoDecomposition {
    Vec3 n{};
    Vec3 s{};
    Mat3 T{};
    Mat3 C{};
};

// Pauli expectation read-out of a two-qubit state. Any coefficient with an
// imaginary residue above 1e-10 raises NumericalInstability instead of being
// truncated, so upstream Hermiticity bugs surface here.
FanoDecomposition decompose(const DensityOperator& s);

// Evaluates the Bloch form back into a matrix; raises NotPhysical when the
// coefficients do not describe a state.
DensityOperator reconstruct(const FanoDecomposition& f);

Mat3 correlation_matrix(const FanoDecomposition& f);

// For a state with maximally mixed marginals (|n|, |s| <= tol, otherwise
// NotStandardForm): true iff exactly one singular value of T exceeds tol.
// T is diagonalized by SVD first because callers may pass rotated frames.
bool is_classical_standard_form(const FanoDecomposition& f, double tol = 1e-8);

} // namespace qcorr
