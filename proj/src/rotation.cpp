#include "qcorr/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

Mat3 rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r = Mat3::identity();
    r(0, 0) = c;
    r(0, 1) = -s;
    r(1, 0) = s;
    r(1, 1) = c;
    return r;
}

Mat3 rotation_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r = Mat3::identity();
    r(0, 0) = c;
    r(0, 2) = s;
    r(2, 0) = -s;
    r(2, 2) = c;
    return r;
}

Mat3 euler_zyz(double alpha, double beta, double gamma) {
    return rotation_z(alpha) * rotation_y(beta) * rotation_z(gamma);
}

std::array<double, 3> euler_angles_zyz(const Mat3& r) {
    const double cb = std::clamp(r(2, 2), -1.0, 1.0);
    const double beta = std::acos(cb);
    const double sb = std::sin(beta);
    if (sb > 1e-9) {
        const double alpha = std::atan2(r(1, 2), r(0, 2));
        const double gamma = std::atan2(r(2, 1), -r(2, 0));
        return {alpha, beta, gamma};
    }
    if (cb > 0.0) // beta = 0: R = Rz(alpha + gamma)
        return {std::atan2(r(1, 0), r(0, 0)), 0.0, 0.0};
    // beta = pi: R = Rz(alpha - gamma) * diag(-1, 1, -1)
    return {std::atan2(-r(1, 0), -r(0, 0)), beta, 0.0};
}

Vec3 spherical_unit(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

} // namespace qcorr
