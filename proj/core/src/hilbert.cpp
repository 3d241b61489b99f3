#include "catgen/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace catgen::hilbert {

namespace {

void check_normalized_flag(const Vector& amps, bool normalized, const char* what) {
    if (normalized && std::abs(amps.squaredNorm() - 1.0) > kFlagTol)
        throw std::invalid_argument(std::string(what) + ": flagged normalized but sum|c|^2 != 1");
}

} // namespace

Cutoff Cutoff::for_alpha(double alpha) {
    const double a = std::abs(alpha);
    return Cutoff(static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0)));
}

FieldVector::FieldVector(Vector a, Cutoff c, bool is_normalized)
    : amps(std::move(a)), cutoff(c), normalized(is_normalized) {
    if (amps.size() != cutoff.dim())
        throw std::invalid_argument("FieldVector: amplitude count does not match cutoff");
    check_normalized_flag(amps, normalized, "FieldVector");
}

AtomFieldVector::AtomFieldVector(Vector a, Cutoff c, bool is_normalized)
    : amps(std::move(a)), cutoff(c), normalized(is_normalized) {
    if (amps.size() != cutoff.joint_dim())
        throw std::invalid_argument("AtomFieldVector: amplitude count does not match cutoff");
    check_normalized_flag(amps, normalized, "AtomFieldVector");
}

OperatorMatrix::OperatorMatrix(Matrix m, bool is_hermitian)
    : mat(std::move(m)), hermitian(is_hermitian) {
    if (mat.rows() != mat.cols())
        throw std::invalid_argument("OperatorMatrix: must be square");
    if (hermitian && (mat - mat.adjoint()).cwiseAbs().maxCoeff() > kFlagTol)
        throw std::invalid_argument("OperatorMatrix: flagged hermitian but M != M^dag");
}

CoherentState coherent_state(Complex alpha, Cutoff cutoff) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("coherent_state: alpha must be finite");
    const double a2 = std::norm(alpha);
    if (a2 > static_cast<double>(cutoff.n_max))
        throw numeric_error("coherent_state: |alpha|^2 exceeds n_max, cutoff too small");

    Vector amps(cutoff.dim());
    amps(0) = std::exp(-a2 / 2.0);
    for (int n = 1; n <= cutoff.n_max; ++n)
        amps(n) = amps(n - 1) * alpha / std::sqrt(static_cast<double>(n));

    const double kept = amps.squaredNorm();
    const double tail = std::max(0.0, 1.0 - kept);
    amps /= std::sqrt(kept);
    return CoherentState{FieldVector(std::move(amps), cutoff, true), tail};
}

FieldVector fock_state(int n, Cutoff cutoff) {
    if (n < 0 || n > cutoff.n_max)
        throw std::invalid_argument("fock_state: level outside cutoff");
    Vector amps = Vector::Zero(cutoff.dim());
    amps(n) = 1.0;
    return FieldVector(std::move(amps), cutoff, true);
}

AtomFieldVector basis_state(int atom, int n, Cutoff cutoff) {
    if (atom < 0 || atom > 1) throw std::invalid_argument("basis_state: atom index must be 0 (g) or 1 (e)");
    if (n < 0 || n > cutoff.n_max) throw std::invalid_argument("basis_state: level outside cutoff");
    Vector amps = Vector::Zero(cutoff.joint_dim());
    amps(atom * cutoff.dim() + n) = 1.0;
    return AtomFieldVector(std::move(amps), cutoff, true);
}

LadderOperators ladder_operators(Cutoff cutoff) {
    const int d = cutoff.dim();
    Matrix a = Matrix::Zero(d, d);
    Matrix num = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    for (int n = 0; n < d; ++n)
        num(n, n) = static_cast<double>(n);
    Matrix adag = a.adjoint();
    return LadderOperators{OperatorMatrix(std::move(a), false),
                           OperatorMatrix(std::move(adag), false),
                           OperatorMatrix(std::move(num), true)};
}

AtomOperators atom_operators() {
    Matrix sz = Matrix::Zero(2, 2), sx = Matrix::Zero(2, 2);
    Matrix sp = Matrix::Zero(2, 2), sm = Matrix::Zero(2, 2);
    sz(0, 0) = -1.0; sz(1, 1) = 1.0;      // g first, e second
    sx(0, 1) = 1.0;  sx(1, 0) = 1.0;
    sp(1, 0) = 1.0;                       // |e><g|
    sm(0, 1) = 1.0;                       // |g><e|
    return AtomOperators{OperatorMatrix(std::move(sz), true),
                         OperatorMatrix(std::move(sx), true),
                         OperatorMatrix(std::move(sp), false),
                         OperatorMatrix(std::move(sm), false)};
}

OperatorMatrix field_parity(Cutoff cutoff) {
    const int d = cutoff.dim();
    Matrix p = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n)
        p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    return OperatorMatrix(std::move(p), true);
}

OperatorMatrix displacement_operator(Complex beta, Cutoff cutoff) {
    const auto ops = ladder_operators(cutoff);
    // K = -i(beta a^dag - beta* a) is Hermitian; D = exp(iK).
    const Matrix k = Complex(0, -1) * (beta * ops.a_dagger.mat - std::conj(beta) * ops.a.mat);
    Eigen::SelfAdjointEigenSolver<Matrix> es(k);
    if (es.info() != Eigen::Success)
        throw numeric_error("displacement_operator: eigendecomposition failed");
    Vector phases(cutoff.dim());
    for (int j = 0; j < cutoff.dim(); ++j)
        phases(j) = std::exp(Complex(0, es.eigenvalues()(j)));
    Matrix d = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return OperatorMatrix(std::move(d), false);
}

OperatorMatrix tensor(const OperatorMatrix& atom_op, const OperatorMatrix& field_op) {
    const Eigen::Index ra = atom_op.mat.rows(), ca = atom_op.mat.cols();
    const Eigen::Index rf = field_op.mat.rows(), cf = field_op.mat.cols();
    Matrix out(ra * rf, ca * cf);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rf, j * cf, rf, cf) = atom_op.mat(i, j) * field_op.mat;
    return OperatorMatrix(std::move(out), atom_op.hermitian && field_op.hermitian);
}

AtomFieldVector tensor(const Eigen::Vector2cd& atom_state, const FieldVector& field) {
    const int d = field.cutoff.dim();
    Vector out(2 * d);
    out.head(d) = atom_state(0) * field.amps;
    out.tail(d) = atom_state(1) * field.amps;
    const bool unit = field.normalized && std::abs(atom_state.squaredNorm() - 1.0) <= kFlagTol;
    return AtomFieldVector(std::move(out), field.cutoff, unit);
}

Complex inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("inner: dimension mismatch");
    return u.dot(v);   // Eigen's dot conjugates the first argument
}

double norm(const Vector& u) { return u.norm(); }

namespace {
double scale_or_throw(const Vector& u) {
    const double n = u.norm();
    if (n < kDegenerateNorm)
        throw degenerate_error("normalize: degenerate (zero-norm) state");
    return 1.0 / n;
}
} // namespace

NormalizedField normalize(const FieldVector& u) {
    const double s = scale_or_throw(u.amps);
    return NormalizedField{FieldVector(u.amps * s, u.cutoff, true), s};
}

NormalizedJoint normalize(const AtomFieldVector& u) {
    const double s = scale_or_throw(u.amps);
    return NormalizedJoint{AtomFieldVector(u.amps * s, u.cutoff, true), s};
}

} // namespace catgen::hilbert
