#include "qcorr/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kSupportFloor = 1e-12; // eigenvalues below this count as null
constexpr double kWeightFloor = 1e-10;  // weight on null directions that still reads as 0
constexpr double kPathTol = 1e-9;

} // namespace

double von_neumann(const DensityOperator& s) {
    double h = 0.0;
    for (double lambda : s.spectrum().values)
        if (lambda > 0.0) h -= lambda * std::log2(lambda);
    return std::max(h, 0.0);
}

double relative_entropy(const DensityOperator& s1, const DensityOperator& s2) {
    if (s1.dim() != s2.dim())
        throw DimensionMismatch("relative_entropy: state dimensions differ");
    const std::size_t d = s1.dim();
    const Eigendecomposition& e1 = s1.spectrum();
    const Eigendecomposition& e2 = s2.spectrum();

    // tr(S1 log2 S1) = sum_i lambda_i log2 lambda_i.
    double first = 0.0;
    for (double lambda : e1.values)
        if (lambda > 0.0) first += lambda * std::log2(lambda);

    // tr(S1 log2 S2) = sum_j w_j log2 mu_j with w_j = <v_j| S1 |v_j>.
    double second = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double w = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            cdouble ip = 0.0;
            for (std::size_t r = 0; r < d; ++r)
                ip += std::conj(e2.vectors(r, j)) * e1.vectors(r, i);
            w += std::max(e1.values[i], 0.0) * std::norm(ip);
        }
        const double mu = e2.values[j];
        if (mu < kSupportFloor) {
            if (w > kWeightFloor) return std::numeric_limits<double>::infinity();
            continue; // w log mu -> 0 on the null direction
        }
        second += w * std::log2(mu);
    }
    return std::max(first - second, 0.0);
}

double mutual_information(const DensityOperator& s) {
    if (s.dim() != 4) throw NotTwoQubit("mutual_information: state must be two-qubit");
    const DensityOperator a = partial_trace(s, 2, 2, Side::A);
    const DensityOperator b = partial_trace(s, 2, 2, Side::B);
    const double entropy_route = von_neumann(a) + von_neumann(b) - von_neumann(s);

    const DensityOperator product(tensor(a.matrix(), b.matrix()));
    const double distance_route = relative_entropy(s, product);

    if (std::abs(entropy_route - distance_route) > kPathTol) {
        std::ostringstream msg;
        msg << "mutual_information: entropy-sum and relative-entropy routes disagree: "
            << entropy_route << " vs " << distance_route;
        throw NumericalInstability(msg.str());
    }
    return std::max(entropy_route, 0.0);
}

} // namespace qcorr
