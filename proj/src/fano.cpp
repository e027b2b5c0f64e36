#include "qcorr/fano.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/pauli.hpp"

namespace qcorr {

namespace {

constexpr double kImagTol = 1e-10;

double real_trace_product(const ComplexMatrix& s, const ComplexMatrix& op, const char* what) {
    // tr(S * Op) without forming the product: sum_ij S_ij Op_ji.
    cdouble t = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) t += s(i, j) * op(j, i);
    if (std::abs(t.imag()) > kImagTol) {
        std::ostringstream msg;
        msg << what << ": imaginary residue " << t.imag() << " exceeds 1e-10";
        throw NumericalInstability(msg.str());
    }
    return t.real();
}

} // namespace

FanoDecomposition decompose(const DensityOperator& s) {
    if (s.dim() != 4) throw NotTwoQubit("decompose: state must be two-qubit (dim 4)");
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    FanoDecomposition f;
    for (int k = 1; k <= 3; ++k) {
        const ComplexMatrix pk = pauli(k);
        f.n[k - 1] = real_trace_product(s.matrix(), tensor(pk, i2), "fano n");
        f.s[k - 1] = real_trace_product(s.matrix(), tensor(i2, pk), "fano s");
        for (int l = 1; l <= 3; ++l)
            f.T(k - 1, l - 1) = real_trace_product(s.matrix(), tensor(pk, pauli(l)), "fano t");
    }
    f.C = f.T - outer(f.n, f.s);
    return f;
}

DensityOperator reconstruct(const FanoDecomposition& f) {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int k = 1; k <= 3; ++k) {
        m += f.n[k - 1] * tensor(pauli(k), i2);
        m += f.s[k - 1] * tensor(i2, pauli(k));
        for (int l = 1; l <= 3; ++l) m += f.T(k - 1, l - 1) * tensor(pauli(k), pauli(l));
    }
    m *= 0.25;
    return DensityOperator(std::move(m)); // NotPhysical if coefficients are not a state
}

Mat3 correlation_matrix(const FanoDecomposition& f) { return f.T - outer(f.n, f.s); }

bool is_classical_standard_form(const FanoDecomposition& f, double tol) {
    if (norm(f.n) > tol || norm(f.s) > tol)
        throw NotStandardForm("is_classical_standard_form: marginals are not maximally mixed");
    const Svd3 svd = svd3(f.T);
    int nonzero = 0;
    for (double sigma : svd.sigma)
        if (sigma > tol) ++nonzero;
    return nonzero == 1;
}

} // namespace qcorr
