#include "qcorr/states.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/pauli.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

namespace {

ComplexMatrix bell_phi_matrix() {
    ComplexMatrix m(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

void check_unit_interval(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << who << ": p = " << p << " is outside [0, 1]";
        throw OutOfRange(msg.str());
    }
}

// 2x2 mixed state from a Ginibre draw.
ComplexMatrix random_qubit_state(Rng& rng) {
    const ComplexMatrix g = ginibre(2, rng);
    ComplexMatrix s = g * g.adjoint();
    s *= 1.0 / s.trace();
    return s;
}

} // namespace

DensityOperator bell_phi() { return DensityOperator(bell_phi_matrix()); }

DensityOperator werner(double p) {
    check_unit_interval(p, "werner");
    ComplexMatrix m = bell_phi_matrix();
    m *= p;
    const double mix = (1.0 - p) / 4.0;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) += mix;
    return DensityOperator(std::move(m));
}

DensityOperator horodecki(double p) {
    check_unit_interval(p, "horodecki");
    ComplexMatrix m = bell_phi_matrix();
    m *= p;
    m(0, 0) += 1.0 - p;
    return DensityOperator(std::move(m));
}

DensityOperator classical_diag(const std::array<std::array<double, 2>, 2>& table) {
    double sum = 0.0;
    for (const auto& row : table)
        for (double p : row) {
            if (!(p >= 0.0))
                throw NotAProbabilityTable("classical_diag: negative entry");
            sum += p;
        }
    if (std::abs(sum - 1.0) > 1e-10)
        throw NotAProbabilityTable("classical_diag: entries do not sum to 1");
    ComplexMatrix m(4, 4);
    m(0, 0) = table[0][0];
    m(1, 1) = table[0][1];
    m(2, 2) = table[1][0];
    m(3, 3) = table[1][1];
    return DensityOperator(std::move(m));
}

DensityOperator standard_form_state(double t1, double t2, double t3) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m += t1 * tensor(pauli_x(), pauli_x());
    m += t2 * tensor(pauli_y(), pauli_y());
    m += t3 * tensor(pauli_z(), pauli_z());
    m *= 0.25;
    try {
        return DensityOperator(std::move(m));
    } catch (const NotPhysical&) {
        std::ostringstream msg;
        msg << "standard_form_state: (" << t1 << ", " << t2 << ", " << t3
            << ") lies outside the Bell tetrahedron";
        throw NotPhysical(msg.str());
    }
}

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw OutOfRange("random_density: dim must be >= 2");
    Rng rng(seed);
    const ComplexMatrix g = ginibre(dim, rng);
    ComplexMatrix s = g * g.adjoint();
    s *= 1.0 / s.trace();
    return DensityOperator(std::move(s));
}

DensityOperator random_separable(std::uint64_t seed, int terms) {
    if (terms < 1) throw OutOfRange("random_separable: terms must be >= 1");
    Rng rng(seed);
    const std::vector<double> weights = dirichlet_uniform(static_cast<std::size_t>(terms), rng);
    ComplexMatrix m(4, 4);
    for (int i = 0; i < terms; ++i) {
        const ComplexMatrix a = random_qubit_state(rng);
        const ComplexMatrix b = random_qubit_state(rng);
        m += weights[static_cast<std::size_t>(i)] * tensor(a, b);
    }
    return DensityOperator(std::move(m));
}

DensityOperator random_classical(std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<double> w = dirichlet_uniform(4, rng);
    const DensityOperator diag = classical_diag({{{w[0], w[1]}, {w[2], w[3]}}});
    const ComplexMatrix u = haar_unitary(2, rng);
    const ComplexMatrix v = haar_unitary(2, rng);
    return apply_local_unitary(diag, u, v);
}

DensityOperator random_standard_form(std::uint64_t seed) {
    Rng rng(seed);
    const double branch = rng.uniform();
    double t[3] = {0.0, 0.0, 0.0};
    if (branch < 0.6) {
        // Mixture of the four Bell projectors; t is the convex combination of
        // the tetrahedron vertices, physical by construction.
        static constexpr double vertex[4][3] = {
            {1, -1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, -1, -1}};
        const std::vector<double> q = dirichlet_uniform(4, rng);
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < 3; ++k) t[k] += q[static_cast<std::size_t>(v)] * vertex[v][k];
    } else if (branch < 0.8) {
        // One correlated axis only: the classically correlated case.
        const int axis = static_cast<int>(rng.next_u64() % 3);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        t[axis] = sign * rng.uniform(0.05, 1.0);
    } else {
        // Two correlated axes, |ta| + |tb| <= 1 keeps the state physical.
        const int skip = static_cast<int>(rng.next_u64() % 3);
        const double a = rng.uniform(0.05, 0.9);
        const double b = rng.uniform(0.05, 1.0 - a);
        int k = 0;
        for (int axis = 0; axis < 3; ++axis) {
            if (axis == skip) continue;
            const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
            t[axis] = sign * (k++ == 0 ? a : b);
        }
    }
    return standard_form_state(t[0], t[1], t[2]);
}

ComplexMatrix random_unitary2(std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(2, rng);
}

} // namespace qcorr
