#include "qcorr/complementarity.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/pauli.hpp"

namespace qcorr {

namespace {

constexpr double kGramTol = 1e-10;
constexpr double kUncertaintySlack = 1e-9;

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

} // namespace

Basis::Basis(ComplexMatrix columns) : columns_(std::move(columns)) {
    if (columns_.rows() != columns_.cols())
        throw DimensionMismatch("basis: need exactly dim vectors of length dim");
    const std::size_t d = columns_.rows();
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j; k < d; ++k) {
            cdouble g = 0.0;
            for (std::size_t i = 0; i < d; ++i) g += std::conj(columns_(i, j)) * columns_(i, k);
            const cdouble expect = (j == k) ? cdouble(1.0) : cdouble(0.0);
            if (std::abs(g - expect) > kGramTol)
                throw NotUnitary("basis: vectors are not orthonormal within 1e-10");
        }
}

Basis Basis::computational(std::size_t dim) { return Basis(ComplexMatrix::identity(dim)); }

Basis Basis::eigenbasis(const Observable& x) { return Basis(x.eigenvectors()); }

std::vector<double> outcome_probabilities(const DensityOperator& s, const Basis& b) {
    if (s.dim() != b.dim())
        throw DimensionMismatch("outcome_probabilities: state and basis dimensions differ");
    const std::size_t d = s.dim();
    std::vector<double> p(d);
    for (std::size_t k = 0; k < d; ++k) {
        cdouble val = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                val += std::conj(b.columns()(i, k)) * s.matrix()(i, j) * b.columns()(j, k);
        double pk = val.real();
        if (pk < 0.0) {
            if (pk < -1e-12)
                throw NumericalInstability("outcome_probabilities: negative probability");
            pk = 0.0;
        }
        p[k] = pk;
    }
    return p;
}

double shannon_entropy(const DensityOperator& s, const Basis& b) {
    double h = 0.0;
    for (double p : outcome_probabilities(s, b)) h -= xlog2x(p);
    return std::max(h, 0.0);
}

double incompatibility(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim())
        throw DimensionMismatch("incompatibility: basis dimensions differ");
    const std::size_t d = b1.dim();
    double max_overlap = 0.0;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            cdouble ip = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                ip += std::conj(b1.columns()(i, k)) * b2.columns()(i, l);
            max_overlap = std::max(max_overlap, std::norm(ip));
        }
    return -std::log2(max_overlap);
}

bool is_mub(const Basis& b1, const Basis& b2, double tol) {
    if (b1.dim() != b2.dim())
        throw DimensionMismatch("is_mub: basis dimensions differ");
    const std::size_t d = b1.dim();
    const double target = 1.0 / static_cast<double>(d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            cdouble ip = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                ip += std::conj(b1.columns()(i, k)) * b2.columns()(i, l);
            if (std::abs(std::norm(ip) - target) > tol) return false;
        }
    return true;
}

std::array<Observable, 3> pauli_triplet() {
    return {Observable(pauli_x()), Observable(pauli_y()), Observable(pauli_z())};
}

UncertaintyCheck uncertainty_check(const DensityOperator& s, const Basis& b1, const Basis& b2) {
    UncertaintyCheck out;
    out.lhs = shannon_entropy(s, b1) + shannon_entropy(s, b2);
    out.rhs = incompatibility(b1, b2);
    out.holds = out.lhs >= out.rhs - kUncertaintySlack;
    return out;
}

} // namespace qcorr
