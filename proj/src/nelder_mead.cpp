#include "qcorr/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

} // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step, int max_iters,
                             double tol) {
    const std::size_t n = x0.size();
    NelderMeadResult result;
    result.best_x = x0;
    result.best_f = f(x0);

    auto track = [&](const std::vector<double>& x, double fx) {
        if (fx < result.best_f) {
            result.best_f = fx;
            result.best_x = x;
        }
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fvals(n + 1);
    fvals[0] = result.best_f;
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += step;
        fvals[i + 1] = f(simplex[i + 1]);
        track(simplex[i + 1], fvals[i + 1]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), reflected(n), trial(n);

    for (int iter = 0; iter < max_iters; ++iter) {
        result.iterations = iter + 1;
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second_worst = order[n - 1];

        if (fvals[worst] - fvals[best] < tol) {
            result.converged = true;
            break;
        }

        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != worst) sum += simplex[i][j];
            centroid[j] = sum / static_cast<double>(n);
        }

        for (std::size_t j = 0; j < n; ++j)
            reflected[j] = centroid[j] + kReflect * (centroid[j] - simplex[worst][j]);
        const double f_reflected = f(reflected);
        track(reflected, f_reflected);

        if (f_reflected < fvals[best]) {
            for (std::size_t j = 0; j < n; ++j)
                trial[j] = centroid[j] + kExpand * (reflected[j] - centroid[j]);
            const double f_expanded = f(trial);
            track(trial, f_expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = trial;
                fvals[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                fvals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fvals[second_worst]) {
            simplex[worst] = reflected;
            fvals[worst] = f_reflected;
            continue;
        }
        // Contraction, outside or inside of the worst vertex.
        if (f_reflected < fvals[worst]) {
            for (std::size_t j = 0; j < n; ++j)
                trial[j] = centroid[j] + kContract * (reflected[j] - centroid[j]);
        } else {
            for (std::size_t j = 0; j < n; ++j)
                trial[j] = centroid[j] - kContract * (centroid[j] - simplex[worst][j]);
        }
        const double f_contracted = f(trial);
        track(trial, f_contracted);
        if (f_contracted < std::min(f_reflected, fvals[worst])) {
            simplex[worst] = trial;
            fvals[worst] = f_contracted;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j)
                simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
            fvals[i] = f(simplex[i]);
            track(simplex[i], fvals[i]);
        }
    }
    return result;
}

} // namespace qcorr
