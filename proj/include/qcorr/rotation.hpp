#pragma once

#include <array>

#include "qcorr/real3.hpp"

namespace qcorr {

Mat3 rotation_z(double angle);
Mat3 rotation_y(double angle);

// z-y-z Euler convention: R = Rz(alpha) * Ry(beta) * Rz(gamma).
Mat3 euler_zyz(double alpha, double beta, double gamma);

// Inverse of euler_zyz up to the usual gimbal ambiguity at beta = 0, pi
// (gamma is fixed to 0 there).
std::array<double, 3> euler_angles_zyz(const Mat3& r);

// Unit vector from polar angles: (sin t cos p, sin t sin p, cos t).
Vec3 spherical_unit(double theta, double phi);

} // namespace qcorr
