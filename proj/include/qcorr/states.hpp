#pragma once

#include <array>
#include <cstdint>

#include "qcorr/density_operator.hpp"

namespace qcorr {

// |phi><phi| with |phi> = (|00> + |11>)/sqrt(2).
DensityOperator bell_phi();

// p * Phi + (1-p)/4 * I. Separable iff p <= 1/3.
DensityOperator werner(double p);

// p * Phi + (1-p) * |00><00|. Entangled for every p > 0; the p = 0 endpoint
// is a pure product state on which correlation coefficients are undefined.
DensityOperator horodecki(double p);

// sum_kl p_kl |k><k| (x) |l><l| for a 2x2 joint probability table.
DensityOperator classical_diag(const std::array<std::array<double, 2>, 2>& table);

// Bell-diagonal state (I (x) I + sum_k t_k Pauli_k (x) Pauli_k) / 4.
// Raises NotPhysical when (t1,t2,t3) lies outside the Bell tetrahedron.
DensityOperator standard_form_state(double t1, double t2, double t3);

// Ginibre construction G G^dagger / tr(G G^dagger); deterministic per seed.
DensityOperator random_density(std::size_t dim, std::uint64_t seed);

// Convex mixture of `terms` random product states with flat Dirichlet weights.
DensityOperator random_separable(std::uint64_t seed, int terms);

// classical_diag of a random table, conjugated by independent Haar local
// unitaries.
DensityOperator random_classical(std::uint64_t seed);

// Random Bell-diagonal state: flat Dirichlet mixture of the four Bell
// projectors, with a slice of draws collapsed onto one or two correlation
// axes so both branches of the classical/quantum dichotomy get exercised.
DensityOperator random_standard_form(std::uint64_t seed);

// Haar-distributed single-qubit unitary; deterministic per seed.
ComplexMatrix random_unitary2(std::uint64_t seed);

} // namespace qcorr
