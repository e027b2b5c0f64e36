#include "qcorr/random.hpp"

#include <cmath>
#include <numbers>

namespace qcorr {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x5851F42D4C957F2DULL));
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1)); // log(1-u1), u1 < 1
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix g = ginibre(dim, rng);
    // Modified Gram-Schmidt on columns; R gets a positive real diagonal,
    // which is exactly the convention under which Q is Haar.
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cdouble proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < dim; ++i) g(i, j) /= nrm;
    }
    return g;
}

std::vector<double> dirichlet_uniform(std::size_t k, Rng& rng) {
    std::vector<double> w(k);
    double total = 0.0;
    for (double& x : w) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    if (total <= 0.0) return std::vector<double>(k, 1.0 / static_cast<double>(k));
    for (double& x : w) x /= total;
    return w;
}

} // namespace qcorr
