#pragma once

#include "qcorr/density_operator.hpp"

namespace qcorr {

// von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) count as 0.
double von_neumann(const DensityOperator& s);

// tr[S1 (log2 S1 - log2 S2)], evaluated in the eigenbases of both states.
// Returns +infinity when the support of S1 is not contained in that of S2
// (an S2 eigenvalue below 1e-12 carries S1 weight above 1e-10); weights
// below that on null directions contribute 0, the continuous extension.
double relative_entropy(const DensityOperator& s1, const DensityOperator& s2);

// Total correlations baseline for a two-qubit state:
// S(A) + S(B) - S(AB), cross-checked internally against the relative entropy
// to the product of the marginals (the two routes must agree within 1e-9).
double mutual_information(const DensityOperator& s);

} // namespace qcorr
