#include "qcorr/real3.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eig.hpp"

namespace qcorr {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    return {a[0] / n, a[1] / n, a[2] / n};
}

Mat3 Mat3::identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
}

Mat3 Mat3::diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
}

Vec3 Mat3::row(std::size_t i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }

Vec3 Mat3::col(std::size_t j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double Mat3::max_abs() const {
    double v = 0.0;
    for (double e : m) v = std::max(v, std::abs(e));
    return v;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
            c(i, j) = sum;
        }
    return c;
}

Vec3 operator*(const Mat3& a, const Vec3& x) {
    return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)};
}

Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c(i, j) = a[i] * b[j];
    return c;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (std::size_t k = 0; k < 9; ++k) c.m[k] = a.m[k] - b.m[k];
    return c;
}

double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

bool is_orthogonal(const Mat3& r, double tol) {
    const Mat3 g = r * r.transpose();
    const Mat3 dev = g - Mat3::identity();
    return dev.max_abs() <= tol;
}

namespace {

// Completes u columns for (near-)zero singular values by Gram-Schmidt
// against the columns already placed.
Vec3 complete_column(const Mat3& u, std::size_t have) {
    const Vec3 candidates[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec3& c : candidates) {
        Vec3 w = c;
        for (std::size_t j = 0; j < have; ++j) {
            const Vec3 uj = u.col(j);
            const double p = dot(uj, w);
            w = {w[0] - p * uj[0], w[1] - p * uj[1], w[2] - p * uj[2]};
        }
        if (norm(w) > 0.5) return normalized(w);
    }
    return {0, 0, 1}; // unreachable for orthonormal inputs
}

} // namespace

Svd3 svd3(const Mat3& a) {
    // Eigen-decompose a^T a (symmetric PSD) through the complex Hermitian
    // Jacobi path; the imaginary parts stay identically zero.
    const Mat3 ata = a.transpose() * a;
    ComplexMatrix h(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h(i, j) = ata(i, j);
    const Eigendecomposition e = hermitian_eig(h); // values descending

    Svd3 out;
    for (std::size_t j = 0; j < 3; ++j) {
        Vec3 v = {e.vectors(0, j).real(), e.vectors(1, j).real(), e.vectors(2, j).real()};
        // Deterministic sign: largest-magnitude component positive.
        std::size_t imax = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
        if (v[imax] < 0.0) v = {-v[0], -v[1], -v[2]};
        v = normalized(v);
        for (std::size_t i = 0; i < 3; ++i) out.v(i, j) = v[i];
        out.sigma[j] = std::sqrt(std::max(0.0, e.values[j]));
    }

    const double scale = std::max(out.sigma[0], 1e-300);
    std::size_t have = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        Vec3 u;
        if (out.sigma[j] > 1e-13 * scale && out.sigma[j] > 0.0) {
            const Vec3 av = a * out.v.col(j);
            u = {av[0] / out.sigma[j], av[1] / out.sigma[j], av[2] / out.sigma[j]};
            // Re-orthogonalize against earlier columns (guards tight clusters).
            for (std::size_t k = 0; k < have; ++k) {
                const Vec3 uk = out.u.col(k);
                const double p = dot(uk, u);
                u = {u[0] - p * uk[0], u[1] - p * uk[1], u[2] - p * uk[2]};
            }
            u = normalized(u);
        } else {
            u = complete_column(out.u, have);
        }
        for (std::size_t i = 0; i < 3; ++i) out.u(i, j) = u[i];
        ++have;
    }
    return out;
}

} // namespace qcorr
