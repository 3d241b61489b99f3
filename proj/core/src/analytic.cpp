#include "catgen/analytic.hpp"

#include <cmath>
#include <numbers>

namespace catgen::analytic {

using hilbert::Vector;

namespace {

double signed_time(double t, TimeSign sign) {
    return sign == TimeSign::paper ? t : -t;
}

// Joint vector (a_g |g> + a_e |e>) ⊗ field, assembled blockwise.
Vector atom_times_field(Complex a_g, Complex a_e, const Vector& field) {
    const auto d = field.size();
    Vector out(2 * d);
    out.head(d) = a_g * field;
    out.tail(d) = a_e * field;
    return out;
}

} // namespace

Energies energies(const RabiParams& p) {
    const double a = p.alpha();
    const double split = (p.omega_a / 2.0) * std::exp(-2.0 * a * a);
    const double base = p.omega_f * a * a + 2.0 * p.lam * a;
    return Energies{base - split, base + split};
}

double theta(const RabiParams& p, double t) {
    const double a = p.alpha();
    return (p.omega_a * t / 2.0) * std::exp(-2.0 * a * a);
}

Complex phase_A(const RabiParams& p, double t, TimeSign sign) {
    const double a = p.alpha();
    const double phase = (p.omega_f * a * a + 2.0 * p.lam * a) * signed_time(t, sign);
    return std::exp(Complex(0.0, phase));
}

PhaseFactors phase_factors(const RabiParams& p, double t, TimeSign sign) {
    return PhaseFactors{theta(p, t), phase_A(p, t, sign)};
}

Probabilities probabilities_pm(const RabiParams& p, double t) {
    const double c = std::cos(theta(p, t));
    const double p_plus = c * c;
    // p_minus as the complement keeps the pair summing to 1 exactly.
    return Probabilities{p_plus, 1.0 - p_plus};
}

Probabilities probabilities_for(double omega_a_t_over_2, double alpha) {
    const double c = std::cos(omega_a_t_over_2 * std::exp(-2.0 * alpha * alpha));
    const double p_plus = c * c;
    return Probabilities{p_plus, 1.0 - p_plus};
}

double time_for_theta(const RabiParams& p, double target) {
    if (p.omega_a <= 0.0)
        throw numeric_error("time_for_theta: theta is identically zero at omega_a = 0");
    const double a = p.alpha();
    return 2.0 * target * std::exp(2.0 * a * a) / p.omega_a;
}

double first_zero_time(const RabiParams& p) {
    if (p.omega_a <= 0.0)
        throw numeric_error("first_zero_time: p_plus never vanishes at omega_a = 0");
    // cos(theta(t)) is monotone from 1 down to -1 over the first half period.
    double lo = 0.0;
    double hi = 1.0 / p.omega_a;
    while (std::cos(theta(p, hi)) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw numeric_error("first_zero_time: bracketing failed");
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::cos(theta(p, mid)) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

AtomFieldVector eigenstate_rotated(Branch sign, const RabiParams& p, Cutoff cutoff) {
    const double a = p.alpha();
    const Vector plus = hilbert::coherent_state(a, cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-a, cutoff).field.amps;
    const double s = sign == Branch::plus ? 1.0 : -1.0;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    // (|e,alpha> ± |g,-alpha>)/sqrt2: the atomic branches are orthogonal, so
    // the prefactor is exact.
    Vector amps(cutoff.joint_dim());
    amps.head(cutoff.dim()) = s * inv_sqrt2 * minus;
    amps.tail(cutoff.dim()) = inv_sqrt2 * plus;
    return AtomFieldVector(std::move(amps), cutoff, true);
}

AtomFieldVector eigenstate(Branch sign, const RabiParams& p, Cutoff cutoff) {
    const double a = p.alpha();
    const Vector plus = hilbert::coherent_state(a, cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-a, cutoff).field.amps;
    const Vector even = plus + minus;    // |C_e>, unnormalized
    const Vector odd = plus - minus;     // |C_o>, unnormalized
    // psi_+ = (|e>|C_o> + |g>|C_e>)/2,  psi_- = (|e>|C_e> + |g>|C_o>)/2.
    // ||C_e||^2 + ||C_o||^2 = 4 regardless of the coherent overlap, so the
    // 1/2 prefactor normalizes exactly.
    Vector amps(cutoff.joint_dim());
    if (sign == Branch::plus) {
        amps.head(cutoff.dim()) = 0.5 * even;
        amps.tail(cutoff.dim()) = 0.5 * odd;
    } else {
        amps.head(cutoff.dim()) = 0.5 * odd;
        amps.tail(cutoff.dim()) = 0.5 * even;
    }
    return AtomFieldVector(std::move(amps), cutoff, true);
}

EigenPair eigenpair(Branch sign, const RabiParams& p, Cutoff cutoff) {
    const Energies e = energies(p);
    return EigenPair{sign,
                     sign == Branch::plus ? e.e_plus : e.e_minus,
                     eigenstate(sign, p, cutoff),
                     eigenstate_rotated(sign, p, cutoff)};
}

FieldVector cat_state(CatKind kind, double alpha, Cutoff cutoff, bool normalized) {
    const Vector plus = hilbert::coherent_state(alpha, cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-alpha, cutoff).field.amps;
    Vector amps = kind == CatKind::even ? Vector(plus + minus) : Vector(plus - minus);
    if (!normalized)
        return FieldVector(std::move(amps), cutoff, false);
    const auto unit = hilbert::normalize(FieldVector(std::move(amps), cutoff, false));
    return unit.state;
}

FieldVector yurke_stoler(double alpha, Branch sign, Cutoff cutoff) {
    const Vector plus = hilbert::coherent_state(alpha, cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-alpha, cutoff).field.amps;
    const Complex i_unit(0.0, 1.0);
    Vector amps = (plus + (sign == Branch::plus ? i_unit : -i_unit) * minus)
                / std::numbers::sqrt2;
    return hilbert::normalize(FieldVector(std::move(amps), cutoff, false)).state;
}

AtomFieldVector evolve(const SuperpositionCoeffs& coeffs, const RabiParams& p, double t,
                       Cutoff cutoff, TimeSign sign) {
    const Energies e = energies(p);
    const double ts = signed_time(t, sign);
    const Complex w_plus = coeffs.c_plus * std::exp(Complex(0.0, e.e_plus * ts));
    const Complex w_minus = coeffs.c_minus * std::exp(Complex(0.0, e.e_minus * ts));
    Vector amps = w_plus * eigenstate(Branch::plus, p, cutoff).amps
                + w_minus * eigenstate(Branch::minus, p, cutoff).amps;
    return hilbert::normalize(AtomFieldVector(std::move(amps), cutoff, false)).state;
}

AtomFieldVector example1_state(const RabiParams& p, double t, Cutoff cutoff, TimeSign sign) {
    const double ts = signed_time(t, sign);
    const double th = theta(p, ts);
    const Complex a_t = phase_A(p, ts, TimeSign::paper);
    const Vector plus = hilbert::coherent_state(p.alpha(), cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-p.alpha(), cutoff).field.amps;
    // A(t)/sqrt2 [ cos(theta) (|g>+|e>)|alpha> - i sin(theta) (|g>-|e>)|-alpha> ]
    const Complex ca = a_t * std::cos(th) / std::numbers::sqrt2;
    const Complex cb = a_t * Complex(0.0, -std::sin(th)) / std::numbers::sqrt2;
    Vector amps = atom_times_field(ca, ca, plus) + atom_times_field(cb, -cb, minus);
    return hilbert::normalize(AtomFieldVector(std::move(amps), cutoff, false)).state;
}

AtomFieldVector example2_state(const RabiParams& p, double t, Cutoff cutoff, TimeSign sign) {
    const double ts = signed_time(t, sign);
    const double th = theta(p, ts);
    const Complex a_t = phase_A(p, ts, TimeSign::paper);
    const Vector plus = hilbert::coherent_state(p.alpha(), cutoff).field.amps;
    const Vector minus = hilbert::coherent_state(-p.alpha(), cutoff).field.amps;
    // A(t)/sqrt2 [ -i sin(theta) (|g>+|e>)|alpha> + cos(theta) (|g>-|e>)|-alpha> ].
    // The second branch reads |-alpha>; the printed form has a known slip here.
    const Complex ca = a_t * Complex(0.0, -std::sin(th)) / std::numbers::sqrt2;
    const Complex cb = a_t * std::cos(th) / std::numbers::sqrt2;
    Vector amps = atom_times_field(ca, ca, plus) + atom_times_field(cb, -cb, minus);
    return hilbert::normalize(AtomFieldVector(std::move(amps), cutoff, false)).state;
}

AtomFieldVector example3_state(const RabiParams& p, double t, Cutoff cutoff, TimeSign sign) {
    const double ts = signed_time(t, sign);
    const Complex phase = std::exp(Complex(0.0, energies(p).e_plus * ts));
    Vector amps = phase * eigenstate(Branch::plus, p, cutoff).amps;
    return AtomFieldVector(std::move(amps), cutoff, true);
}

} // namespace catgen::analytic
