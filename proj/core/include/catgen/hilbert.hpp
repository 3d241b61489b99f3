#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>

#include "catgen/errors.hpp"

namespace catgen::hilbert {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance below which a vector counts as the zero vector (normalize rejects it).
inline constexpr double kDegenerateNorm = 1e-14;
// Tolerance for the "normalized" and "hermitian" flags.
inline constexpr double kFlagTol = 1e-12;

// --------------------------- Truncated Fock space ---------------------------

// Highest retained Fock level; the field space has dimension n_max+1 and the
// joint atom-field space 2*(n_max+1).
struct Cutoff {
    int n_max;

    explicit Cutoff(int n) : n_max(n) {
        if (n < 0) throw std::invalid_argument("Cutoff: n_max must be >= 0");
    }

    int dim() const { return n_max + 1; }
    int joint_dim() const { return 2 * (n_max + 1); }

    // Default policy: n_max = ceil(|alpha|^2 + 10|alpha| + 20), which keeps the
    // coherent tail mass below 1e-12 for |alpha| <= 4.
    static Cutoff for_alpha(double alpha);
};

// Complex amplitudes over |0..n_max>. Unnormalized vectors are legal (the
// unnormalized cats |C_e>, |C_o| live here) but must say so via the flag.
struct FieldVector {
    Vector amps;
    Cutoff cutoff;
    bool normalized;

    FieldVector(Vector a, Cutoff c, bool is_normalized);
};

// Complex amplitudes over {g,e} x |0..n_max>, atom-major with the |g> block
// first: joint index = atom * (n_max+1) + n, atom 0 = g, atom 1 = e.
struct AtomFieldVector {
    Vector amps;
    Cutoff cutoff;
    bool normalized;

    AtomFieldVector(Vector a, Cutoff c, bool is_normalized);

    Eigen::VectorBlock<const Vector> g_block() const { return amps.head(cutoff.dim()); }
    Eigen::VectorBlock<const Vector> e_block() const { return amps.tail(cutoff.dim()); }
};

// Dense complex matrix on the field or joint space. Setting the hermitian
// flag asserts max|M - M^dag| <= 1e-12 (checked at construction).
struct OperatorMatrix {
    Matrix mat;
    bool hermitian;

    OperatorMatrix(Matrix m, bool is_hermitian);
};

// ------------------------------- States -------------------------------------

struct CoherentState {
    FieldVector field;     // renormalized over the truncated space
    double tail_mass;      // 1 - sum |c_n|^2 before renormalization
};

// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized after truncation.
// Rejects |alpha|^2 > n_max (tail mass would be macroscopic).
CoherentState coherent_state(Complex alpha, Cutoff cutoff);

AtomFieldVector basis_state(int atom, int n, Cutoff cutoff);
FieldVector fock_state(int n, Cutoff cutoff);

// ------------------------------ Operators -----------------------------------

struct LadderOperators {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
    OperatorMatrix number;   // diag(0..n_max)
};

LadderOperators ladder_operators(Cutoff cutoff);

// 2x2 atomic operators in the fixed (g,e) ordering:
//   sigma_z|e> = +|e>,  sigma_z|g> = -|g>,  sigma_plus|g> = |e>.
struct AtomOperators {
    OperatorMatrix sigma_z;
    OperatorMatrix sigma_x;
    OperatorMatrix sigma_plus;
    OperatorMatrix sigma_minus;
};

AtomOperators atom_operators();

// diag((-1)^n) on the field space.
OperatorMatrix field_parity(Cutoff cutoff);

// exp(beta a^dag - beta* a) on the truncated space, built from the spectral
// exponential of the Hermitian generator -i(beta a^dag - beta* a); unitary to
// machine precision.
OperatorMatrix displacement_operator(Complex beta, Cutoff cutoff);

// --------------------------- Tensor products --------------------------------

// Kronecker composition, atom-major: (atom ⊗ field).
OperatorMatrix tensor(const OperatorMatrix& atom_op, const OperatorMatrix& field_op);
AtomFieldVector tensor(const Eigen::Vector2cd& atom_state, const FieldVector& field);

// ----------------------- Inner products and norms ---------------------------

// Sesquilinear, conjugate-linear in the first argument.
Complex inner(const Vector& u, const Vector& v);
inline Complex inner(const FieldVector& u, const FieldVector& v) { return inner(u.amps, v.amps); }
inline Complex inner(const AtomFieldVector& u, const AtomFieldVector& v) { return inner(u.amps, v.amps); }

double norm(const Vector& u);
inline double norm(const FieldVector& u) { return norm(u.amps); }
inline double norm(const AtomFieldVector& u) { return norm(u.amps); }

// Scales to unit norm; reports the applied factor 1/||u||.
// Throws degenerate_error when ||u|| < 1e-14 (e.g. |C_o> at alpha=0).
struct NormalizedField { FieldVector state; double scale; };
struct NormalizedJoint { AtomFieldVector state; double scale; };
NormalizedField normalize(const FieldVector& u);
NormalizedJoint normalize(const AtomFieldVector& u);

} // namespace catgen::hilbert
