#pragma once

#include "qcorr/density_operator.hpp"
#include "qcorr/fano.hpp"
#include "qcorr/observable.hpp"

namespace qcorr {

// Variances at or below this are treated as the 0/0 singularity and raise
// UndefinedPcc; the pure-product limit is never silently assigned a value.
inline constexpr double kVarianceEpsilon = 1e-12;

// tr(S X); imaginary residue above 1e-10 raises NumericalInstability.
double expectation(const DensityOperator& s, const Observable& x);

// E(X^2) - E(X)^2, clamped to 0 when within -1e-12 of it.
double variance(const DensityOperator& s, const Observable& x);

// Covariance of local observables A (side A) and B (side B) on a bipartite
// state of dimension dim(A) * dim(B).
double covariance(const DensityOperator& s, const Observable& a, const Observable& b);

// Pearson correlation coefficient Cov / sqrt(V_A V_B) for local observables
// on a two-qubit state. Values in (1, 1 + 1e-10] clamp to 1 (same for -1);
// anything further out raises NumericalInstability.
double pcc(const DensityOperator& s, const Observable& a, const Observable& b);

// PCC for the dichotomic observables a.Pauli, b.Pauli through the Bloch-form
// coefficients: (a^T C b) / sqrt((1 - (a.n)^2)(1 - (b.s)^2)). Independent of
// the trace-based route above; the two must agree for unit vectors a, b.
double pcc_bloch(const FanoDecomposition& f, const Vec3& a, const Vec3& b);

// PCC of the rank-transformed observables (eigenvalues replaced by their
// ascending ranks, ties averaged). Coincides with pcc for d = 2.
double spearman(const DensityOperator& s, const Observable& a, const Observable& b);

} // namespace qcorr
