#pragma once

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// The operator basis used throughout is the Pauli triplet in the fixed order
// (X, Y, Z). Sign conventions elsewhere (e.g. the -p middle coefficient of
// the Werner correlation tensor) depend on this ordering.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// pauli(1..3) = X, Y, Z.
ComplexMatrix pauli(int k);

} // namespace qcorr
