#include "catgen/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace catgen::oracle {

using hilbert::Complex;

Spectrum eigendecompose(const OperatorMatrix& h) {
    if (!h.hermitian)
        throw std::invalid_argument("eigendecompose: operator not flagged Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat);
    if (es.info() != Eigen::Success)
        throw numeric_error("eigendecompose: solver failed");
    Matrix vecs = es.eigenvectors();
    // Deterministic phase: largest-magnitude component real positive.
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
        Eigen::Index k;
        vecs.col(j).cwiseAbs().maxCoeff(&k);
        const Complex pivot = vecs(k, j);
        if (std::abs(pivot) > 0.0)
            vecs.col(j) *= std::conj(pivot) / std::abs(pivot);
    }
    return Spectrum{es.eigenvalues(), std::move(vecs)};
}

Vector evolve_exact(const Spectrum& spec, const Vector& psi0, double t, TimeSign sign) {
    const double s = sign == TimeSign::paper ? 1.0 : -1.0;
    Vector coeffs = spec.eigenvectors.adjoint() * psi0;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
        coeffs(j) *= std::exp(Complex(0.0, s * spec.eigenvalues(j) * t));
    return spec.eigenvectors * coeffs;
}

AtomFieldVector evolve_exact(const OperatorMatrix& h, const AtomFieldVector& psi0, double t,
                             TimeSign sign) {
    const Spectrum spec = eigendecompose(h);
    return AtomFieldVector(evolve_exact(spec, psi0.amps, t, sign), psi0.cutoff,
                           psi0.normalized);
}

double residual_norm(const OperatorMatrix& h, const Vector& psi, double energy) {
    return (h.mat * psi - energy * psi).norm();
}

double fidelity(const Vector& psi, const Vector& phi) {
    return std::norm(hilbert::inner(psi, phi));
}

double eigenspace_fidelity(const Spectrum& spec, double energy, double degeneracy_tol,
                           const Vector& psi) {
    double weight = 0.0;
    for (Eigen::Index j = 0; j < spec.eigenvalues.size(); ++j)
        if (std::abs(spec.eigenvalues(j) - energy) <= degeneracy_tol)
            weight += std::norm(Complex(spec.eigenvectors.col(j).dot(psi)));
    return weight;
}

ConvergenceTable cutoff_convergence(const std::function<double(Cutoff)>& probe,
                                    const std::vector<int>& cutoffs) {
    if (cutoffs.size() < 2)
        throw std::invalid_argument("cutoff_convergence: need at least two cutoffs");
    ConvergenceTable table;
    table.converged = true;
    double prev_value = 0.0;
    double prev_delta = -1.0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        const double value = probe(Cutoff(cutoffs[i]));
        const double delta = i == 0 ? 0.0 : std::abs(value - prev_value);
        if (i >= 2 && delta > prev_delta)
            table.converged = false;
        table.rows.push_back(ConvergenceRow{cutoffs[i], value, delta});
        prev_value = value;
        if (i >= 1) prev_delta = delta;
    }
    return table;
}

} // namespace catgen::oracle
