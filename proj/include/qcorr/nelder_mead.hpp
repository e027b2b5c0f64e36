#pragma once

#include <functional>
#include <vector>

namespace qcorr {

struct NelderMeadResult {
    std::vector<double> best_x; // best point ever evaluated
    double best_f = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free simplex minimization with the standard reflection /
// expansion / contraction / shrink coefficients. Tracks the best point over
// every evaluation (not just the final simplex), which is what callers use
// as the certified value. Converges when the simplex function spread falls
// below `tol` (absolute, the objectives here are O(1)).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step, int max_iters,
                             double tol);

} // namespace qcorr
