#include "qcorr/observable.hpp"

#include "qcorr/errors.hpp"

namespace qcorr {

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("observable: matrix must be square");
    eig_ = hermitian_eig(matrix_); // raises NotHermitian on bad input
}

} // namespace qcorr
