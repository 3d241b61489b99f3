#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catgen/analytic.hpp"
#include "catgen/hilbert.hpp"

namespace catgen::measurement {

using hilbert::AtomFieldVector;
using hilbert::Cutoff;
using hilbert::FieldVector;

enum class AtomLevel { g, e };

// Probability below which an outcome is reported as impossible and carries no
// post-measurement state.
inline constexpr double kImpossible = 1e-14;

struct MeasurementOutcome {
    AtomLevel level;
    double probability;                      // Born weight, in [0,1]
    std::optional<FieldVector> post_field;   // normalized; absent when impossible
};

struct AtomMeasurement {
    MeasurementOutcome ground;
    MeasurementOutcome excited;
};

// Projective measurement of the atomic level. Born rule: the probability is
// the squared norm of the corresponding atomic block and the post state is
// that block renormalized.
AtomMeasurement measure_atom(const AtomFieldVector& state);

// ------------------------ Coherent pointer readout ---------------------------

enum class PointerMode {
    idealized,   // treats {|alpha>, |-alpha>} as orthogonal pointers
    exact        // Born weights in the symmetrically orthogonalized pair
};

struct PointerReadout {
    double p_plus;     // |alpha> weight
    double p_minus;    // |-alpha> weight
    double residual;   // weight outside span{|alpha>, |-alpha>} (exact mode)
};

// Idealized mode decomposes the field in the nonorthogonal pair
// {|alpha>, |-alpha>} and weighs the coefficients as if the pair were
// orthonormal, reproducing the printed cos^2/sin^2 probabilities. Exact mode
// projects onto the symmetrically orthogonalized pointers
// (|C_e>/||C_e|| ± |C_o>/||C_o||)/sqrt2, so neither pointer is privileged;
// the two modes differ by O(e^{-4 alpha^2}). Degenerate at alpha = 0.
PointerReadout pointer_probabilities(const FieldVector& field, double alpha, PointerMode mode);

// ------------------------------- Sampling ------------------------------------

struct SampleCounts {
    long counts_g;
    long counts_e;
    std::uint64_t seed;
};

// Monte Carlo atomic detector: `shots` Bernoulli draws against the Born
// probability of |e>, from a private mt19937_64 seeded with `seed`. Uniform
// variates are built as (rng() >> 11) * 2^-53 so counts are reproducible
// across platforms.
SampleCounts sample(const AtomFieldVector& state, long shots, std::uint64_t seed);

// --------------------------- Cat-state diagnostics ---------------------------

enum class CatTarget { even_cat, odd_cat, ys_plus, ys_minus };

// |<target|field>|^2 with the target normalized at the field's cutoff.
double cat_fidelity(const FieldVector& field, CatTarget target, double alpha);

// Wigner function on a rectangular grid, displaced-parity convention:
//   W(beta) = (2/pi) <D(beta)^dag psi| diag((-1)^n) |D(beta)^dag psi>,
// beta = x + i p. Values are real; integral over the plane is 1 for states
// contained in the window and cutoff.
struct WignerGrid {
    std::vector<double> x;
    std::vector<double> p;
    Eigen::MatrixXd w;   // w(i, j) = W(x[j] + i * p[i])
};

WignerGrid wigner_grid(const FieldVector& field, double x_min, double x_max,
                       double p_min, double p_max, int resolution);

} // namespace catgen::measurement
