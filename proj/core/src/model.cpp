#include "catgen/model.hpp"

#include <cmath>

namespace catgen::model {

using hilbert::Complex;
using hilbert::Matrix;
using hilbert::tensor;

RabiParams::RabiParams(double wa, double wf, double coupling, std::optional<double> alpha)
    : omega_a(wa), omega_f(wf), lam(coupling), fixed_alpha(alpha) {
    if (!(omega_f > 0.0)) throw std::invalid_argument("RabiParams: omega_f must be > 0");
    if (!(omega_a >= 0.0)) throw std::invalid_argument("RabiParams: omega_a must be >= 0");
    if (!std::isfinite(lam)) throw std::invalid_argument("RabiParams: lambda must be finite");
    if (fixed_alpha && !std::isfinite(*fixed_alpha))
        throw std::invalid_argument("RabiParams: alpha must be finite");
}

OperatorMatrix hamiltonian_full(const RabiParams& p, Cutoff cutoff, bool rwa_only) {
    const auto atoms = hilbert::atom_operators();
    const auto ladder = hilbert::ladder_operators(cutoff);
    const int d = cutoff.dim();
    const OperatorMatrix id_field(Matrix::Identity(d, d), true);

    Matrix h = (p.omega_a / 2.0) * tensor(atoms.sigma_z, id_field).mat
             + p.omega_f * tensor(OperatorMatrix(Matrix::Identity(2, 2), true), ladder.number).mat;
    if (rwa_only) {
        const Matrix coupling = tensor(atoms.sigma_plus, ladder.a).mat
                              + tensor(atoms.sigma_minus, ladder.a_dagger).mat;
        h += p.lam * coupling;
    } else {
        const OperatorMatrix quad(ladder.a.mat + ladder.a_dagger.mat, true);
        h += p.lam * tensor(atoms.sigma_x, quad).mat;
    }
    return OperatorMatrix(std::move(h), true);
}

OperatorMatrix hamiltonian_rotated(const RabiParams& p, Cutoff cutoff) {
    const auto atoms = hilbert::atom_operators();
    const auto ladder = hilbert::ladder_operators(cutoff);
    const int d = cutoff.dim();
    const OperatorMatrix id_field(Matrix::Identity(d, d), true);
    const OperatorMatrix quad(ladder.a.mat + ladder.a_dagger.mat, true);

    Matrix h = -(p.omega_a / 2.0) * tensor(atoms.sigma_x, id_field).mat
             + p.omega_f * tensor(OperatorMatrix(Matrix::Identity(2, 2), true), ladder.number).mat
             + p.lam * tensor(atoms.sigma_z, quad).mat;
    return OperatorMatrix(std::move(h), true);
}

Eigen::Matrix2cd rotation_y_atom(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    Eigen::Matrix2cd r;
    r << c, -s,
         s,  c;
    return r;
}

OperatorMatrix rotation_y(double angle, Cutoff cutoff) {
    const int d = cutoff.dim();
    return tensor(OperatorMatrix(rotation_y_atom(angle), false),
                  OperatorMatrix(Matrix::Identity(d, d), true));
}

OperatorMatrix parity_operator(Cutoff cutoff) {
    const auto atoms = hilbert::atom_operators();
    return tensor(atoms.sigma_x, hilbert::field_parity(cutoff));
}

} // namespace catgen::model
