#include "qcorr/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kImagTol = 1e-10;
constexpr double kClampSlack = 1e-10;
constexpr double kRankTieGap = 1e-9;

double real_trace_product(const ComplexMatrix& s, const ComplexMatrix& op) {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) t += s(i, j) * op(j, i);
    if (std::abs(t.imag()) > kImagTol) {
        std::ostringstream msg;
        msg << "expectation: imaginary residue " << t.imag() << " exceeds 1e-10";
        throw NumericalInstability(msg.str());
    }
    return t.real();
}

double clamp_correlation(double r) {
    if (std::abs(r) <= 1.0) return r;
    if (std::abs(r) <= 1.0 + kClampSlack) return r > 0.0 ? 1.0 : -1.0;
    std::ostringstream msg;
    msg << "correlation coefficient " << r << " is out of [-1, 1] beyond roundoff";
    throw NumericalInstability(msg.str());
}

// Eigenvalues replaced by ascending ranks, ties averaged.
Observable rank_transformed(const Observable& x) {
    const std::vector<double>& vals = x.eigenvalues(); // descending
    const std::size_t d = vals.size();
    std::vector<std::size_t> asc(d);
    std::iota(asc.begin(), asc.end(), 0);
    std::reverse(asc.begin(), asc.end()); // ascending value order

    std::vector<double> rank(d, 0.0);
    std::size_t pos = 0;
    while (pos < d) {
        std::size_t end = pos + 1;
        while (end < d && std::abs(vals[asc[end]] - vals[asc[end - 1]]) < kRankTieGap) ++end;
        const double avg = 0.5 * static_cast<double>(pos + 1 + end); // mean of ranks pos+1..end
        for (std::size_t k = pos; k < end; ++k) rank[asc[k]] = avg;
        pos = end;
    }

    const ComplexMatrix& v = x.eigenvectors();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cdouble sum = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                sum += rank[k] * v(i, k) * std::conj(v(j, k));
            m(i, j) = sum;
        }
    return Observable(std::move(m));
}

} // namespace

double expectation(const DensityOperator& s, const Observable& x) {
    if (s.dim() != x.dim())
        throw DimensionMismatch("expectation: state and observable dimensions differ");
    return real_trace_product(s.matrix(), x.matrix());
}

double variance(const DensityOperator& s, const Observable& x) {
    if (s.dim() != x.dim())
        throw DimensionMismatch("variance: state and observable dimensions differ");
    const double mean = real_trace_product(s.matrix(), x.matrix());
    const double second = real_trace_product(s.matrix(), x.matrix() * x.matrix());
    double var = second - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12) {
            std::ostringstream msg;
            msg << "variance: negative value " << var;
            throw NumericalInstability(msg.str());
        }
        var = 0.0;
    }
    return var;
}

double covariance(const DensityOperator& s, const Observable& a, const Observable& b) {
    if (a.dim() * b.dim() != s.dim())
        throw DimensionMismatch("covariance: local dims do not factor the state dimension");
    const ComplexMatrix ia = ComplexMatrix::identity(a.dim());
    const ComplexMatrix ib = ComplexMatrix::identity(b.dim());
    const double joint = real_trace_product(s.matrix(), tensor(a.matrix(), b.matrix()));
    const double mean_a = real_trace_product(s.matrix(), tensor(a.matrix(), ib));
    const double mean_b = real_trace_product(s.matrix(), tensor(ia, b.matrix()));
    return joint - mean_a * mean_b;
}

double pcc(const DensityOperator& s, const Observable& a, const Observable& b) {
    if (a.dim() * b.dim() != s.dim())
        throw DimensionMismatch("pcc: local dims do not factor the state dimension");
    const Observable a_full(tensor(a.matrix(), ComplexMatrix::identity(b.dim())));
    const Observable b_full(tensor(ComplexMatrix::identity(a.dim()), b.matrix()));
    const double var_a = variance(s, a_full);
    const double var_b = variance(s, b_full);
    if (var_a <= kVarianceEpsilon || var_b <= kVarianceEpsilon)
        throw UndefinedPcc("pcc: an observable has vanishing variance on this state");
    return clamp_correlation(covariance(s, a, b) / std::sqrt(var_a * var_b));
}

double pcc_bloch(const FanoDecomposition& f, const Vec3& a, const Vec3& b) {
    const double an = dot(a, f.n);
    const double bs = dot(b, f.s);
    const double var_a = 1.0 - an * an;
    const double var_b = 1.0 - bs * bs;
    if (var_a <= kVarianceEpsilon || var_b <= kVarianceEpsilon)
        throw UndefinedPcc("pcc_bloch: an observable has vanishing variance on this state");
    // a^T C b with C = T - n s^T, expanded so the cached C is not relied on.
    const double numer = dot(a, f.T * b) - an * bs;
    return clamp_correlation(numer / std::sqrt(var_a * var_b));
}

double spearman(const DensityOperator& s, const Observable& a, const Observable& b) {
    return pcc(s, rank_transformed(a), rank_transformed(b));
}

} // namespace qcorr
