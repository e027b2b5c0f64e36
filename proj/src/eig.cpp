#include "qcorr/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagTol = 1e-12;
constexpr double kDegenerateGap = 1e-9;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const ComplexMatrix& a) {
    double sum = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) sum += std::norm(a(p, q));
    return std::sqrt(2.0 * sum);
}

// Annihilates a(p,q) with the unitary plane rotation
//   J(p,p) = c, J(p,q) = -s e^{i phi}, J(q,p) = s e^{-i phi}, J(q,q) = c,
// where phi = arg a(p,q) and the angle comes from atan2(2|a_pq|, a_pp - a_qq).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cdouble apq = a(p, q);
    const double rho = std::abs(apq);
    if (rho == 0.0) return;

    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * rho, alpha - beta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cdouble phase = apq / rho;              // e^{i phi}
    const cdouble sp = s * phase;                 // s e^{i phi}
    const cdouble spc = s * std::conj(phase);     // s e^{-i phi}

    const std::size_t n = a.rows();
    // Column update: A <- A J
    for (std::size_t k = 0; k < n; ++k) {
        const cdouble akp = a(k, p);
        const cdouble akq = a(k, q);
        a(k, p) = c * akp + spc * akq;
        a(k, q) = -sp * akp + c * akq;
    }
    // Row update: A <- J^dagger A
    for (std::size_t k = 0; k < n; ++k) {
        const cdouble apk = a(p, k);
        const cdouble aqk = a(q, k);
        a(p, k) = c * apk + sp * aqk;
        a(q, k) = -spc * apk + c * aqk;
    }
    // Accumulate eigenvectors: V <- V J
    for (std::size_t k = 0; k < v.rows(); ++k) {
        const cdouble vkp = v(k, p);
        const cdouble vkq = v(k, q);
        v(k, p) = c * vkp + spc * vkq;
        v(k, q) = -sp * vkp + c * vkq;
    }
    // Clean the annihilated pair against roundoff drift.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

void regularize_degenerate_clusters(Eigendecomposition& e) {
    const std::size_t n = e.values.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && std::abs(e.values[end - 1] - e.values[end]) < kDegenerateGap) ++end;
        if (end - start > 1) {
            // Modified Gram-Schmidt over the cluster columns in order.
            for (std::size_t j = start; j < end; ++j) {
                for (std::size_t k = start; k < j; ++k) {
                    cdouble proj = 0.0;
                    for (std::size_t i = 0; i < n; ++i)
                        proj += std::conj(e.vectors(i, k)) * e.vectors(i, j);
                    for (std::size_t i = 0; i < n; ++i)
                        e.vectors(i, j) -= proj * e.vectors(i, k);
                }
                double norm = 0.0;
                for (std::size_t i = 0; i < n; ++i) norm += std::norm(e.vectors(i, j));
                norm = std::sqrt(norm);
                for (std::size_t i = 0; i < n; ++i) e.vectors(i, j) /= norm;
            }
        }
        start = end;
    }
}

} // namespace

ComplexMatrix Eigendecomposition::reconstruct() const {
    const std::size_t n = values.size();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cdouble sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += values[k] * vectors(i, k) * std::conj(vectors(j, k));
            m(i, j) = sum;
        }
    return m;
}

Eigendecomposition hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("hermitian_eig: matrix is not square");
    if (m.rows() > 64)
        throw DimensionMismatch("hermitian_eig: dimension exceeds 64");
    if (!m.all_finite())
        throw NotHermitian("hermitian_eig: matrix has non-finite entries");
    if (!m.is_hermitian(kHermitianTol))
        throw NotHermitian("hermitian_eig: max|M - M^dagger| exceeds 1e-10");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize exactly so roundoff asymmetry cannot bias the sweeps.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cdouble mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = kOffDiagTol * std::max(1.0, m.frobenius_norm());
    int sweep = 0;
    while (off_diagonal_mass(a) > tol) {
        if (++sweep > kMaxSweeps)
            throw NumericalInstability("hermitian_eig: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Eigendecomposition e;
    e.values.resize(n);
    e.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        e.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) e.vectors(i, j) = v(i, order[j]);
    }
    regularize_degenerate_clusters(e);
    return e;
}

} // namespace qcorr
