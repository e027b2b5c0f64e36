#pragma once

#include <array>
#include <vector>

#include "qcorr/density_operator.hpp"
#include "qcorr/observable.hpp"

namespace qcorr {

// An orthonormal basis of C^d, stored as matrix columns.
class Basis {
public:
    explicit Basis(ComplexMatrix columns);

    static Basis computational(std::size_t dim);
    static Basis eigenbasis(const Observable& x);

    std::size_t dim() const { return columns_.rows(); }
    const ComplexMatrix& columns() const { return columns_; }

private:
    ComplexMatrix columns_;
};

// Born probabilities p_k = <x_k| S |x_k>.
std::vector<double> outcome_probabilities(const DensityOperator& s, const Basis& b);

// Shannon entropy (bits) of the measurement outcome distribution.
double shannon_entropy(const DensityOperator& s, const Basis& b);

// -log2 max_kl |<x_k|y_l>|^2, in [0, log2 d]. Zero for identical bases,
// log2 d for mutually unbiased ones.
double incompatibility(const Basis& b1, const Basis& b2);

// True iff every |<x_k|y_l>|^2 is within tol of 1/d.
bool is_mub(const Basis& b1, const Basis& b2, double tol = 1e-8);

// X, Y, Z: the complete set of three pairwise complementary dichotomic
// observables for a qubit.
std::array<Observable, 3> pauli_triplet();

struct UncertaintyCheck {
    double lhs;  // H(B1) + H(B2)
    double rhs;  // incompatibility of the pair
    bool holds;  // lhs >= rhs - 1e-9
};

// Entropic uncertainty relation for a basis pair on one system.
UncertaintyCheck uncertainty_check(const DensityOperator& s, const Basis& b1, const Basis& b2);

} // namespace qcorr
