#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catgen/analytic.hpp"
#include "catgen/measurement.hpp"
#include "catgen/model.hpp"

namespace catgen::pipeline {

using analytic::SuperpositionCoeffs;
using hilbert::Cutoff;
using measurement::AtomLevel;
using measurement::SampleCounts;
using model::RabiParams;

enum class Engine { analytic, oracle, both };

// Named atomic preparations. plus = (|g>+|e>)/sqrt2, minus = (|g>-|e>)/sqrt2.
Eigen::Vector2cd atom_preset(const std::string& name);

// End-to-end apparatus: atom source -> rotation region R -> cavity ->
// inverse rotation -> atomic detector. The joint input is atom_init ⊗ |alpha>
// (or directly c+ |psi+> + c- |psi-> when coeffs is set, which covers initial
// states that are not products). The cavity stage evolves under the rotated
// Hamiltonian between R and R^-1, so the apparatus as a whole applies
// U = e^{+iHt} to the input.
struct PipelineConfig {
    RabiParams params;
    Eigen::Vector2cd atom_init = (Eigen::Vector2cd() << 1.0, 0.0).finished();
    std::optional<SuperpositionCoeffs> coeffs;   // overrides atom_init when set
    std::optional<double> alpha;                 // field amplitude; default params.alpha()
    double interaction_time = 0.0;
    Engine engine = Engine::analytic;
    std::optional<int> cutoff_override;
    long shots = 0;                              // 0 = distribution only
    std::uint64_t seed = 0;
};

struct BranchResult {
    AtomLevel level;
    double probability;
    std::optional<hilbert::FieldVector> post_field;
    std::string label;          // best-matching cat label, or "unclassified"
    double label_fidelity;
};

struct PipelineResult {
    BranchResult ground;
    BranchResult excited;
    double residual_weight;                      // weight outside span{psi+, psi-}
    std::optional<SampleCounts> counts;          // when shots > 0
    std::optional<double> engine_fidelity;       // when both engines run
    int cutoff_used;
    std::uint64_t seed;
};

// Maximum residual weight the analytic engine accepts; the closed form
// silently drops anything outside span{psi+, psi-}.
inline constexpr double kAnalyticResidualTol = 1e-6;

// A branch gets a named label only at fidelity >= 0.99.
inline constexpr double kLabelThreshold = 0.99;

PipelineResult run(const PipelineConfig& config);

// c± = <psi±|atom_init ⊗ |alpha>> and the weight 1 - |c+|^2 - |c-|^2 left
// outside the two-state slice (reported, never dropped).
struct CoeffsWithResidual {
    SuperpositionCoeffs coeffs;
    double residual;
};
CoeffsWithResidual coefficients_from_initial(const Eigen::Vector2cd& atom_init, double alpha,
                                             const RabiParams& params, Cutoff cutoff);

// ------------------------------- Sweeps --------------------------------------

enum class SweepAxis { alpha, time, omega_a };

struct SweepRow {
    double axis_value;
    double p_g;
    double p_e;
    std::string label_g;
    std::string label_e;
    double fid_g;
    double fid_e;
    double residual;
    std::optional<double> engine_fidelity;
};

// One row per grid point, in grid order. Rows are independent computations;
// results are deterministic for a fixed config and seed.
std::vector<SweepRow> sweep(const PipelineConfig& base, SweepAxis axis,
                            const std::vector<double>& grid);

} // namespace catgen::pipeline
