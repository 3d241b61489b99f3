#include "catgen/measurement.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace catgen::measurement {

using analytic::Branch;
using analytic::CatKind;
using hilbert::Complex;
using hilbert::Vector;

namespace {

MeasurementOutcome block_outcome(AtomLevel level, const Vector& block, Cutoff cutoff) {
    const double prob = block.squaredNorm();
    if (prob < kImpossible)
        return MeasurementOutcome{level, prob, std::nullopt};
    Vector post = block / std::sqrt(prob);
    return MeasurementOutcome{level, prob,
                              FieldVector(std::move(post), cutoff, true)};
}

} // namespace

AtomMeasurement measure_atom(const AtomFieldVector& state) {
    if (!state.normalized)
        throw std::invalid_argument("measure_atom: state must be normalized");
    return AtomMeasurement{block_outcome(AtomLevel::g, state.g_block(), state.cutoff),
                           block_outcome(AtomLevel::e, state.e_block(), state.cutoff)};
}

PointerReadout pointer_probabilities(const FieldVector& field, double alpha, PointerMode mode) {
    if (!field.normalized)
        throw std::invalid_argument("pointer_probabilities: field must be normalized");
    if (std::abs(alpha) == 0.0)
        throw degenerate_error("pointer_probabilities: pointer basis degenerate at alpha = 0");

    const Cutoff cutoff = field.cutoff;
    const Vector plus = hilbert::coherent_state(alpha, cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-alpha, cutoff).field.amps;

    if (mode == PointerMode::idealized) {
        // Solve the 2x2 Gram system for field = u+ |alpha> + u- |-alpha> and
        // weigh u± as if the pair were orthonormal.
        const Complex k = plus.dot(minus);
        const Complex b_plus = plus.dot(field.amps);
        const Complex b_minus = minus.dot(field.amps);
        const double det = 1.0 - std::norm(k);
        if (std::abs(det) < 1e-12)
            throw degenerate_error("pointer_probabilities: Gram matrix singular");
        const Complex u_plus = (b_plus - k * b_minus) / det;
        const Complex u_minus = (b_minus - std::conj(k) * b_plus) / det;
        const double w_plus = std::norm(u_plus);
        const double w_minus = std::norm(u_minus);
        const double total = w_plus + w_minus;
        if (total < kImpossible)
            throw degenerate_error("pointer_probabilities: field orthogonal to pointer span");
        return PointerReadout{w_plus / total, w_minus / total, 0.0};
    }

    // Exact mode: symmetric orthogonalization = normalized even/odd cat basis.
    const Vector even = (plus + minus).normalized();
    Vector odd_raw = plus - minus;
    const double odd_norm = odd_raw.norm();
    if (odd_norm < hilbert::kDegenerateNorm)
        throw degenerate_error("pointer_probabilities: odd pointer degenerate");
    const Vector odd = odd_raw / odd_norm;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const Complex c_even = even.dot(field.amps);
    const Complex c_odd = odd.dot(field.amps);
    const double p_plus = std::norm(inv_sqrt2 * (c_even + c_odd));
    const double p_minus = std::norm(inv_sqrt2 * (c_even - c_odd));
    return PointerReadout{p_plus, p_minus, std::max(0.0, 1.0 - p_plus - p_minus)};
}

SampleCounts sample(const AtomFieldVector& state, long shots, std::uint64_t seed) {
    if (shots < 1)
        throw std::invalid_argument("sample: shots must be >= 1");
    const AtomMeasurement m = measure_atom(state);
    const double p_e = m.excited.probability;
    std::mt19937_64 rng(seed);
    long n_e = 0;
    for (long i = 0; i < shots; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p_e) ++n_e;
    }
    return SampleCounts{shots - n_e, n_e, seed};
}

double cat_fidelity(const FieldVector& field, CatTarget target, double alpha) {
    if (!field.normalized)
        throw std::invalid_argument("cat_fidelity: field must be normalized");
    const Cutoff cutoff = field.cutoff;
    FieldVector reference = [&] {
        switch (target) {
            case CatTarget::even_cat: return analytic::cat_state(CatKind::even, alpha, cutoff, true);
            case CatTarget::odd_cat: return analytic::cat_state(CatKind::odd, alpha, cutoff, true);
            case CatTarget::ys_plus: return analytic::yurke_stoler(alpha, Branch::plus, cutoff);
            default: return analytic::yurke_stoler(alpha, Branch::minus, cutoff);
        }
    }();
    return std::norm(hilbert::inner(reference.amps, field.amps));
}

WignerGrid wigner_grid(const FieldVector& field, double x_min, double x_max,
                       double p_min, double p_max, int resolution) {
    if (!field.normalized)
        throw std::invalid_argument("wigner_grid: field must be normalized");
    if (resolution < 2 || x_max <= x_min || p_max <= p_min)
        throw std::invalid_argument("wigner_grid: bad window");

    WignerGrid grid;
    grid.x.resize(resolution);
    grid.p.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        grid.x[i] = x_min + (x_max - x_min) * i / (resolution - 1);
        grid.p[i] = p_min + (p_max - p_min) * i / (resolution - 1);
    }
    grid.w.resize(resolution, resolution);

    const Eigen::VectorXd parity = [&] {
        Eigen::VectorXd signs(field.cutoff.dim());
        for (int n = 0; n < field.cutoff.dim(); ++n)
            signs(n) = (n % 2 == 0) ? 1.0 : -1.0;
        return signs;
    }();
    const double scale = 2.0 / std::numbers::pi;

    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const Complex beta(grid.x[j], grid.p[i]);
            // D(beta)^dag = D(-beta)
            const auto d = hilbert::displacement_operator(-beta, field.cutoff);
            const Vector displaced = d.mat * field.amps;
            double value = 0.0;
            for (int n = 0; n < field.cutoff.dim(); ++n)
                value += parity(n) * std::norm(displaced(n));
            grid.w(i, j) = scale * value;
        }
    }
    return grid;
}

} // namespace catgen::measurement
