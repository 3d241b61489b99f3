#pragma once

#include <functional>
#include <vector>

#include "catgen/analytic.hpp"
#include "catgen/hilbert.hpp"

namespace catgen::oracle {

using analytic::TimeSign;
using hilbert::AtomFieldVector;
using hilbert::Cutoff;
using hilbert::Matrix;
using hilbert::OperatorMatrix;
using hilbert::Vector;

// Full dense Hermitian eigendecomposition: eigenvalues ascending, columns
// orthonormal, each eigenvector's largest-magnitude component made real
// positive so the decomposition is deterministic.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
};

Spectrum eigendecompose(const OperatorMatrix& h);

// V e^{±i Lambda t} V^dag psi0;  + is the paper convention, - the standard one.
Vector evolve_exact(const Spectrum& spec, const Vector& psi0, double t,
                    TimeSign sign = TimeSign::paper);
AtomFieldVector evolve_exact(const OperatorMatrix& h, const AtomFieldVector& psi0, double t,
                             TimeSign sign = TimeSign::paper);

// ||H psi - E psi||_2
double residual_norm(const OperatorMatrix& h, const Vector& psi, double energy);
inline double residual_norm(const OperatorMatrix& h, const AtomFieldVector& psi, double energy) {
    return residual_norm(h, psi.amps, energy);
}

// |<psi|phi>|^2 for normalized pure states.
double fidelity(const Vector& psi, const Vector& phi);
inline double fidelity(const AtomFieldVector& psi, const AtomFieldVector& phi) {
    return fidelity(psi.amps, phi.amps);
}
inline double fidelity(const hilbert::FieldVector& psi, const hilbert::FieldVector& phi) {
    return fidelity(psi.amps, phi.amps);
}

// ||P psi||^2 with P the projector onto the eigenspace of eigenvalues within
// degeneracy_tol of `energy`. The right stationarity probe when the target
// eigenvalue is degenerate (omega_a = 0 makes E+ = E-).
double eigenspace_fidelity(const Spectrum& spec, double energy, double degeneracy_tol,
                           const Vector& psi);

// ----------------------- Cutoff-convergence studies --------------------------

struct ConvergenceRow {
    int n_max;
    double value;
    double delta;    // |value - previous value|; 0 for the first row
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    bool converged;  // successive deltas monotonically non-increasing
};

ConvergenceTable cutoff_convergence(const std::function<double(Cutoff)>& probe,
                                    const std::vector<int>& cutoffs);

} // namespace catgen::oracle
