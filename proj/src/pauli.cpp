#include "qcorr/pauli.hpp"

#include "qcorr/errors.hpp"

namespace qcorr {

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows(2, 2, {0.0, 1.0, 1.0, 0.0});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows(2, 2, {0.0, cdouble(0.0, -1.0), cdouble(0.0, 1.0), 0.0});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows(2, 2, {1.0, 0.0, 0.0, -1.0});
}

ComplexMatrix pauli(int k) {
    switch (k) {
        case 1: return pauli_x();
        case 2: return pauli_y();
        case 3: return pauli_z();
        default: throw OutOfRange("pauli: index must be 1, 2 or 3");
    }
}

} // namespace qcorr
