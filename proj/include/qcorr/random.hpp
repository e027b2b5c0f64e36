#pragma once

#include <cstdint>
#include <random>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Deterministic substream derivation for independent parallel work items.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for work item `stream` of a job seeded with `seed`; stable contract
// so that serial and parallel execution see identical random inputs.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

// Seeded random source. The generator is std::mt19937_64 (a fully specified
// algorithm) and all value mappings are implemented here rather than through
// std::*_distribution, so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the paired value is cached.
    double gaussian();

    // Entries for Ginibre matrices: re, im both standard normal.
    cdouble complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// d x d matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(std::size_t dim, Rng& rng);

// Haar-distributed unitary via Gram-Schmidt QR of a Ginibre matrix with the
// positive-diagonal phase convention.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

// Flat Dirichlet weights (normalized unit-rate exponentials), length k.
std::vector<double> dirichlet_uniform(std::size_t k, Rng& rng);

} // namespace qcorr
