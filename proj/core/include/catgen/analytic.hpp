#pragma once

#include "catgen/hilbert.hpp"
#include "catgen/model.hpp"

namespace catgen::analytic {

using hilbert::AtomFieldVector;
using hilbert::Complex;
using hilbert::Cutoff;
using hilbert::FieldVector;
using model::RabiParams;

enum class Branch { plus, minus };
enum class CatKind { even, odd };

// Phase convention of the evolution operator. `paper` is U = e^{+iHt};
// `standard` is e^{-iHt}. The switch flips the sign of every relative phase
// and leaves all |.|^2 probabilities unchanged.
enum class TimeSign { paper, standard };

// ----------------------------- Scalar results -------------------------------

struct Energies {
    double e_plus;    // upper sign of the closed form: -(omega_a/2)e^{-2a^2} + ...
    double e_minus;
};

// E± = ∓(omega_a/2) e^{-2 alpha^2} + omega_f alpha^2 + 2 lambda alpha
// (alpha real). E+ <= E- whenever omega_a >= 0.
// Exact eigenvalues of the truncated Hamiltonians only when omega_a = 0 and
// alpha = -lambda/omega_f; otherwise the displaced-oscillator approximation.
Energies energies(const RabiParams& p);

// theta(t) = (omega_a t / 2) e^{-2 alpha^2}
double theta(const RabiParams& p, double t);

// A(t) = e^{i (omega_f alpha^2 + 2 lambda alpha) t}  (conjugated under `standard`)
Complex phase_A(const RabiParams& p, double t, TimeSign sign = TimeSign::paper);

struct PhaseFactors {
    double theta;       // radians
    Complex a_phase;    // unit modulus
};
PhaseFactors phase_factors(const RabiParams& p, double t, TimeSign sign = TimeSign::paper);

struct Probabilities {
    double p_plus;    // detection weight of |alpha>; cos^2(theta)
    double p_minus;   // detection weight of |-alpha>; defined as 1 - p_plus
};

// Idealized pointer probabilities of the first worked example
// (for the second example the two roles are interchanged).
Probabilities probabilities_pm(const RabiParams& p, double t);

// Same quantity on the (omega_a t / 2, alpha) axes the figure data uses.
Probabilities probabilities_for(double omega_a_t_over_2, double alpha);

// Smallest t > 0 with theta(t) = target (monotone inversion; omega_a > 0 required).
double time_for_theta(const RabiParams& p, double target);

// First zero of p_plus(t), located by bisection on cos(theta(t)) rather than
// by inverting theta, so it can serve as a check of the closed-form inversion.
double first_zero_time(const RabiParams& p);

// ------------------------------- States -------------------------------------

// |psi_R±> = (|e,alpha> ± |g,-alpha>)/sqrt(2): exact eigenstates of the
// rotated Hamiltonian when omega_a = 0 and alpha = -lambda/omega_f, the
// displaced-oscillator doublet otherwise.
AtomFieldVector eigenstate_rotated(Branch sign, const RabiParams& p, Cutoff cutoff);

// |psi_+> = (|e>|C_o> + |g>|C_e>)/2 and |psi_-> = (|e>|C_e> + |g>|C_o>)/2,
// the reverse-rotated partners of eigenstate_rotated. Exactly normalized and
// mutually orthogonal for every alpha (even/odd Fock supports are disjoint).
AtomFieldVector eigenstate(Branch sign, const RabiParams& p, Cutoff cutoff);

struct EigenPair {
    Branch sign;
    double energy;
    AtomFieldVector state;
    AtomFieldVector rotated_state;
};
EigenPair eigenpair(Branch sign, const RabiParams& p, Cutoff cutoff);

// |C_e> = |alpha> + |-alpha>, |C_o> = |alpha> - |-alpha>.
// Unnormalized norm^2 is 2(1 ± e^{-2 alpha^2}); the normalized odd cat is
// degenerate at alpha = 0.
FieldVector cat_state(CatKind kind, double alpha, Cutoff cutoff, bool normalized);

// (|alpha> ± i|-alpha>)/sqrt(2); exactly normalized for real alpha.
// Equals the equal-weight (theta = pi/4) excited-branch projection of the
// first worked example.
FieldVector yurke_stoler(double alpha, Branch sign, Cutoff cutoff);

// ---------------------------- Time evolution --------------------------------

struct SuperpositionCoeffs {
    Complex c_plus;
    Complex c_minus;
};

// c+ e^{iE+t}|psi+> + c- e^{iE-t}|psi->, renormalized.
AtomFieldVector evolve(const SuperpositionCoeffs& coeffs, const RabiParams& p, double t,
                       Cutoff cutoff, TimeSign sign = TimeSign::paper);

// The three worked examples in closed form; each equals evolve(...) with the
// corresponding coefficients ((1,1)/sqrt2, (1,-1)/sqrt2, (1,0)).
AtomFieldVector example1_state(const RabiParams& p, double t, Cutoff cutoff,
                               TimeSign sign = TimeSign::paper);
AtomFieldVector example2_state(const RabiParams& p, double t, Cutoff cutoff,
                               TimeSign sign = TimeSign::paper);
AtomFieldVector example3_state(const RabiParams& p, double t, Cutoff cutoff,
                               TimeSign sign = TimeSign::paper);

} // namespace catgen::analytic
