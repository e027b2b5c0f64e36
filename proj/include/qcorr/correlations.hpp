#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qcorr/density_operator.hpp"
#include "qcorr/fano.hpp"
#include "qcorr/observable.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/real3.hpp"

namespace qcorr {

// A pair of local observable triplets. Row i of frame_a is the Bloch
// direction of the dichotomic observable A_i = a_i . Pauli (eigenvalues +-1),
// likewise frame_b for side B. Orthonormal rows make the three observables
// of each side pairwise complementary.
struct MeasurementFrame {
    Mat3 frame_a = Mat3::identity();
    Mat3 frame_b = Mat3::identity();

    MeasurementFrame() = default;
    MeasurementFrame(const Mat3& a, const Mat3& b); // NotUnitary unless both orthogonal

    // Identity frame: observables (X, Y, Z) on both sides.
    static MeasurementFrame pauli() { return MeasurementFrame(); }
};

// The dichotomic observable a . Pauli for a unit Bloch direction.
Observable bloch_observable(const Vec3& a);

enum class StateClass {
    uncorrelated,
    classical_compatible,
    quantum_certified,
    inconclusive,
    not_applicable, // pure product states, where correlation is undefined
};

const char* to_string(StateClass c);

struct OptimizerOptions {
    std::uint64_t seed = 42;
    int restarts = 32;          // random starts on top of the identity and SVD seeds
    int max_iters = 2000;
    double simplex_tol = 1e-10;
    double tol = 1e-6;          // classification / value-comparison tolerance
    ExecMode exec = ExecMode::parallel;
};

struct Bounds {
    double spectral; // bounds any single-pair |PCC|
    double trace;    // bounds the summed correlations of separable states
};

struct Classification {
    StateClass cls;
    std::string reason;
};

struct CorrelationReport {
    std::array<double, 3> per_pair{}; // signed PCCs in the report's frame
    double sum_abs = 0.0;             // sum of |per_pair|
    double r_value = 0.0;             // maximized total correlations
    double max_single_pair = 0.0;
    double spectral_bound = 0.0;
    double trace_bound = 0.0;
    MeasurementFrame frame;           // argmax frame
    StateClass classification = StateClass::inconclusive;
    std::string classification_reason;
};

// Sum over the three frame pairs of |PCC|, computed through the trace-based
// correlation route. Raises UndefinedPcc when any pair has zero variance.
double pair_sum(const DensityOperator& s, const MeasurementFrame& f);

// Maximizes pair_sum over pairs of local frames by multistart Nelder-Mead on
// the six z-y-z Euler angles, seeded with the identity frame, the SVD frames
// of the correlation matrix C, and opts.restarts random rotations. The
// returned r_value is the best value actually evaluated (a certified lower
// bound on the supremum, exact for the closed-form families); it is never
// below the SVD-seed value. Deterministic given opts.seed, independent of
// the execution mode. Raises UndefinedPcc for pure product states and
// NonConvergence if no start converges within opts.max_iters.
CorrelationReport total_correlations(const DensityOperator& s, const OptimizerOptions& opts = {});

// Maximum |PCC| over single observable pairs, same multistart scheme over
// the four polar angles of two Bloch directions, seeded by the top singular
// vectors of C.
double max_single_pair(const DensityOperator& s, const OptimizerOptions& opts = {});

// Closed-form total correlations of a classically correlated state: the
// single-pair value |t - n s| / sqrt((1-n^2)(1-s^2)) along the correlated
// axis, evaluated in the frame that diagonalizes C. Requires C of rank <= 1
// with both Bloch vectors aligned to the correlated axis (NotClassicalForm
// otherwise).
double classical_r_closed_form(const FanoDecomposition& f);

// Spectral- and trace-norm bounds of C scaled by the marginal variances.
// Raises SingularMarginal when |n| or |s| >= 1 - 1e-10.
Bounds bounds(const FanoDecomposition& f);

// Classification per the concentration criteria; wraps total_correlations
// and maps pure product states to not_applicable.
Classification classify(const DensityOperator& s, const OptimizerOptions& opts = {});

// Entanglement negativity: sum of |negative eigenvalues| of the partial
// transpose. Positive iff entangled for two qubits.
double negativity(const DensityOperator& s);

// Detection used for the not_applicable path: pure state with positive
// partial transpose and vanishing correlation matrix.
bool is_pure_product(const DensityOperator& s);

} // namespace qcorr
