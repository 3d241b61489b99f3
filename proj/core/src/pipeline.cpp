#include "catgen/pipeline.hpp"

#include "catgen/oracle.hpp"

#include <cmath>
#include <numbers>

namespace catgen::pipeline {

using analytic::Branch;
using hilbert::AtomFieldVector;
using hilbert::Complex;
using hilbert::FieldVector;
using hilbert::Vector;
using measurement::AtomMeasurement;
using measurement::CatTarget;

Eigen::Vector2cd atom_preset(const std::string& name) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    Eigen::Vector2cd v;
    if (name == "ground") v << 1.0, 0.0;
    else if (name == "excited") v << 0.0, 1.0;
    else if (name == "plus") v << inv_sqrt2, inv_sqrt2;
    else if (name == "minus") v << inv_sqrt2, -inv_sqrt2;
    else throw std::invalid_argument("atom_preset: unknown preset '" + name + "'");
    return v;
}

CoeffsWithResidual coefficients_from_initial(const Eigen::Vector2cd& atom_init, double alpha,
                                             const RabiParams& params, Cutoff cutoff) {
    const FieldVector field = hilbert::coherent_state(alpha, cutoff).field;
    const AtomFieldVector initial = hilbert::tensor(atom_init, field);
    const AtomFieldVector psi_plus = analytic::eigenstate(Branch::plus, params, cutoff);
    const AtomFieldVector psi_minus = analytic::eigenstate(Branch::minus, params, cutoff);
    const Complex c_plus = hilbert::inner(psi_plus, initial);
    const Complex c_minus = hilbert::inner(psi_minus, initial);
    const double residual =
        std::max(0.0, initial.amps.squaredNorm() - std::norm(c_plus) - std::norm(c_minus));
    return CoeffsWithResidual{SuperpositionCoeffs{c_plus, c_minus}, residual};
}

namespace {

struct LabelCandidate {
    std::string name;
    FieldVector state;
};

std::vector<LabelCandidate> label_candidates(double alpha, Cutoff cutoff) {
    std::vector<LabelCandidate> candidates;
    candidates.push_back({"even_cat", analytic::cat_state(analytic::CatKind::even, alpha, cutoff, true)});
    if (std::abs(alpha) > 0.0) {
        candidates.push_back({"odd_cat", analytic::cat_state(analytic::CatKind::odd, alpha, cutoff, true)});
        candidates.push_back({"minus_alpha", hilbert::coherent_state(-alpha, cutoff).field});
    }
    candidates.push_back({"ys_plus", analytic::yurke_stoler(alpha, Branch::plus, cutoff)});
    candidates.push_back({"ys_minus", analytic::yurke_stoler(alpha, Branch::minus, cutoff)});
    candidates.push_back({"alpha", hilbert::coherent_state(alpha, cutoff).field});
    return candidates;
}

BranchResult label_branch(const measurement::MeasurementOutcome& outcome, double alpha,
                          Cutoff cutoff) {
    BranchResult branch{outcome.level, outcome.probability, outcome.post_field,
                        "impossible", 0.0};
    if (!outcome.post_field)
        return branch;
    double best = -1.0;
    std::string best_name;
    for (const auto& candidate : label_candidates(alpha, cutoff)) {
        const double f = oracle::fidelity(candidate.state, *outcome.post_field);
        if (f > best) {
            best = f;
            best_name = candidate.name;
        }
    }
    branch.label = best >= kLabelThreshold ? best_name : "unclassified";
    branch.label_fidelity = best;
    return branch;
}

AtomFieldVector evolve_oracle(const PipelineConfig& config, const AtomFieldVector& initial,
                              Cutoff cutoff) {
    // Staged apparatus: R(pi/2), cavity under H_R, R(-pi/2). Composition equals
    // e^{+iHt} on the input.
    const auto r_fwd = model::rotation_y(std::numbers::pi / 2.0, cutoff);
    const auto r_back = model::rotation_y(-std::numbers::pi / 2.0, cutoff);
    const auto h_rot = model::hamiltonian_rotated(config.params, cutoff);
    const AtomFieldVector rotated(r_fwd.mat * initial.amps, cutoff, initial.normalized);
    const AtomFieldVector evolved =
        oracle::evolve_exact(h_rot, rotated, config.interaction_time, analytic::TimeSign::paper);
    return AtomFieldVector(r_back.mat * evolved.amps, cutoff, evolved.normalized);
}

} // namespace

PipelineResult run(const PipelineConfig& config) {
    const double alpha = config.alpha ? *config.alpha : config.params.alpha();
    const Cutoff cutoff = config.cutoff_override ? Cutoff(*config.cutoff_override)
                                                 : Cutoff::for_alpha(alpha);

    // Superposition content of the input, reported regardless of engine.
    SuperpositionCoeffs coeffs{0.0, 0.0};
    double residual = 0.0;
    std::optional<AtomFieldVector> initial;
    if (config.coeffs) {
        coeffs = *config.coeffs;
        const double total = std::norm(coeffs.c_plus) + std::norm(coeffs.c_minus);
        if (total < measurement::kImpossible)
            throw degenerate_error("pipeline::run: zero superposition coefficients");
    } else {
        const double atom_norm = config.atom_init.norm();
        if (std::abs(atom_norm - 1.0) > hilbert::kFlagTol)
            throw std::invalid_argument("pipeline::run: atom_init must be normalized");
        const FieldVector field = hilbert::coherent_state(alpha, cutoff).field;
        initial = hilbert::tensor(config.atom_init, field);
        const auto expansion =
            coefficients_from_initial(config.atom_init, alpha, config.params, cutoff);
        coeffs = expansion.coeffs;
        residual = expansion.residual;
    }

    const bool want_analytic = config.engine != Engine::oracle;
    const bool want_oracle = config.engine != Engine::analytic;

    std::optional<AtomFieldVector> analytic_state;
    if (want_analytic) {
        if (residual > kAnalyticResidualTol)
            throw numeric_error(
                "pipeline::run: initial state lies outside span{psi+, psi-} "
                "(residual " + std::to_string(residual) + "); use the oracle engine");
        analytic_state = analytic::evolve(coeffs, config.params, config.interaction_time, cutoff);
    }

    std::optional<AtomFieldVector> oracle_state;
    if (want_oracle) {
        if (!initial) {
            // Coefficient mode: materialize the superposition, then run the
            // staged apparatus on it.
            Vector amps = coeffs.c_plus * analytic::eigenstate(Branch::plus, config.params, cutoff).amps
                        + coeffs.c_minus * analytic::eigenstate(Branch::minus, config.params, cutoff).amps;
            initial = hilbert::normalize(AtomFieldVector(std::move(amps), cutoff, false)).state;
        }
        oracle_state = evolve_oracle(config, *initial, cutoff);
    }

    const AtomFieldVector& final_state = want_analytic ? *analytic_state : *oracle_state;
    const AtomMeasurement outcome = measurement::measure_atom(final_state);

    PipelineResult result{label_branch(outcome.ground, alpha, cutoff),
                          label_branch(outcome.excited, alpha, cutoff),
                          residual,
                          std::nullopt,
                          std::nullopt,
                          cutoff.n_max,
                          config.seed};
    if (want_analytic && want_oracle)
        result.engine_fidelity = oracle::fidelity(*analytic_state, *oracle_state);
    if (config.shots > 0)
        result.counts = measurement::sample(final_state, config.shots, config.seed);
    return result;
}

std::vector<SweepRow> sweep(const PipelineConfig& base, SweepAxis axis,
                            const std::vector<double>& grid) {
    if (grid.empty())
        throw std::invalid_argument("pipeline::sweep: empty grid");
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const double value : grid) {
        PipelineConfig config = base;
        switch (axis) {
            case SweepAxis::alpha:
                config.alpha = value;
                config.params.fixed_alpha = value;
                break;
            case SweepAxis::time:
                config.interaction_time = value;
                break;
            case SweepAxis::omega_a:
                config.params = RabiParams(value, base.params.omega_f, base.params.lam,
                                           base.params.fixed_alpha);
                break;
        }
        const PipelineResult r = run(config);
        rows.push_back(SweepRow{value, r.ground.probability, r.excited.probability,
                                r.ground.label, r.excited.label, r.ground.label_fidelity,
                                r.excited.label_fidelity, r.residual_weight,
                                r.engine_fidelity});
    }
    return rows;
}

} // namespace catgen::pipeline
