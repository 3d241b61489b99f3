#pragma once

#include <optional>

#include "catgen/hilbert.hpp"

namespace catgen::model {

using hilbert::Cutoff;
using hilbert::OperatorMatrix;

// Model constants of the Rabi Hamiltonian, hbar = 1. alpha is the coherent
// displacement used by the closed-form eigenstates: either pinned by the
// caller or recomputed as -lambda/omega_f on every access (the value that
// makes the displaced-oscillator doublet exact at omega_a = 0).
struct RabiParams {
    double omega_a;                       // atomic transition frequency, >= 0
    double omega_f;                       // field mode frequency, > 0
    double lam;                           // coupling strength
    std::optional<double> fixed_alpha;    // nullopt = auto-consistent

    RabiParams(double wa, double wf, double coupling,
               std::optional<double> alpha = std::nullopt);

    double alpha() const { return fixed_alpha ? *fixed_alpha : -lam / omega_f; }
    bool auto_consistent() const { return !fixed_alpha.has_value(); }
};

// H = (omega_a/2) sigma_z ⊗ I + omega_f I ⊗ a^dag a
//     + lambda (sigma_+ + sigma_-) ⊗ (a^dag + a).
// With rwa_only, the coupling keeps just the corotating part
// lambda (sigma_+ ⊗ a + sigma_- ⊗ a^dag)  (Jaynes-Cummings contrast case).
OperatorMatrix hamiltonian_full(const RabiParams& p, Cutoff cutoff, bool rwa_only = false);

// H_R = -(omega_a/2) sigma_x ⊗ I + omega_f I ⊗ a^dag a
//       + lambda sigma_z ⊗ (a^dag + a);  equal to R H R^dag for R = rotation_y(pi/2).
OperatorMatrix hamiltonian_rotated(const RabiParams& p, Cutoff cutoff);

// exp(-i (angle/2) sigma_y) with sigma_y = [[0,-i],[i,0]] in the (g,e)
// ordering. At angle = pi/2: R sigma_z R^dag = -sigma_x and
// R sigma_x R^dag = sigma_z, the convention that produces the rotated
// Hamiltonian above with its printed signs.
Eigen::Matrix2cd rotation_y_atom(double angle);

// The same rotation on the joint space: rotation_y_atom(angle) ⊗ I_field.
OperatorMatrix rotation_y(double angle, Cutoff cutoff);

// Pi = sigma_x ⊗ diag((-1)^n); Hermitian, unitary, squares to the identity,
// and commutes with H_R to machine zero.
OperatorMatrix parity_operator(Cutoff cutoff);

} // namespace catgen::model
