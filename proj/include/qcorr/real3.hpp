#pragma once

#include <array>
#include <cstddef>

namespace qcorr {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 normalized(const Vec3& a);

// Row-major real 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity();
    static Mat3 diag(double a, double b, double c);

    double& operator()(std::size_t i, std::size_t j) { return m[i * 3 + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return m[i * 3 + j]; }

    Vec3 row(std::size_t i) const;
    Vec3 col(std::size_t j) const;
    Mat3 transpose() const;
    double max_abs() const;
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& x);
Mat3 outer(const Vec3& a, const Vec3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
double det(const Mat3& a);

bool is_orthogonal(const Mat3& r, double tol);

// Singular value decomposition a = u * diag(sigma) * v^T with sigma
// descending and non-negative; u, v orthogonal. Computed by diagonalizing
// a^T a, accurate to machine precision at the scales used here (|a_ij| <= 1).
struct Svd3 {
    Mat3 u;
    Vec3 sigma;
    Mat3 v;
};

Svd3 svd3(const Mat3& a);

} // namespace qcorr
