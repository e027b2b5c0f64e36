#include "qcorr/density_operator.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-10;
constexpr double kUnitaryTol = 1e-10;

} // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2)
        throw NotPhysical("density operator: matrix must be square with dim >= 2");
    if (!matrix_.all_finite())
        throw NotPhysical("density operator: matrix has non-finite entries");
    if (!matrix_.is_hermitian(kHermitianTol))
        throw NotHermitian("density operator: max|M - M^dagger| exceeds 1e-10");
    const double trace_dev = std::abs(matrix_.trace() - cdouble(1.0));
    if (trace_dev > kTraceTol) {
        std::ostringstream msg;
        msg << "density operator: trace deviates from 1 by " << trace_dev;
        throw NotPhysical(msg.str());
    }
    spectrum_ = hermitian_eig(matrix_);
    for (double lambda : spectrum_.values)
        if (lambda < kPsdTol) {
            std::ostringstream msg;
            msg << "density operator: negative eigenvalue " << lambda;
            throw NotPhysical(msg.str());
        }
}

DensityOperator partial_trace(const DensityOperator& s, std::size_t dim_a, std::size_t dim_b,
                              Side keep) {
    if (dim_a * dim_b != s.dim())
        throw DimensionMismatch("partial_trace: dims do not factor the composite dimension");
    const ComplexMatrix& m = s.matrix();
    if (keep == Side::A) {
        ComplexMatrix r(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t k = 0; k < dim_a; ++k) {
                cdouble sum = 0.0;
                for (std::size_t j = 0; j < dim_b; ++j) sum += m(i * dim_b + j, k * dim_b + j);
                r(i, k) = sum;
            }
        return DensityOperator(std::move(r));
    }
    ComplexMatrix r(dim_b, dim_b);
    for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t l = 0; l < dim_b; ++l) {
            cdouble sum = 0.0;
            for (std::size_t i = 0; i < dim_a; ++i) sum += m(i * dim_b + j, i * dim_b + l);
            r(j, l) = sum;
        }
    return DensityOperator(std::move(r));
}

DensityOperator apply_local_unitary(const DensityOperator& s, const ComplexMatrix& u,
                                    const ComplexMatrix& v) {
    if (s.dim() != 4)
        throw NotTwoQubit("apply_local_unitary: state must be two-qubit");
    if (u.rows() != 2 || u.cols() != 2 || v.rows() != 2 || v.cols() != 2)
        throw DimensionMismatch("apply_local_unitary: U and V must be 2x2");
    if (!u.is_unitary(kUnitaryTol))
        throw NotUnitary("apply_local_unitary: U is not unitary");
    if (!v.is_unitary(kUnitaryTol))
        throw NotUnitary("apply_local_unitary: V is not unitary");
    const ComplexMatrix w = tensor(u, v);
    return DensityOperator(w * s.matrix() * w.adjoint());
}

double purity(const DensityOperator& s) {
    // tr(S^2) = ||S||_F^2 for Hermitian S.
    const double f = s.matrix().frobenius_norm();
    return f * f;
}

} // namespace qcorr
