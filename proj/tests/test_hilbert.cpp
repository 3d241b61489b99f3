#include "doctest.h"

#include "catgen/amplitude_io.hpp"
#include "catgen/hilbert.hpp"

#include <cmath>
#include <filesystem>
#include <random>

#include "test_util.hpp"

using namespace catgen;
using hilbert::Complex;
using hilbert::Cutoff;
using hilbert::Vector;

// exp(-1/2), exp(-2): coherent-series oracle values, 17 digits
constexpr double kExpMinusHalf = 0.60653065971263342;
constexpr double kExpMinus2 = 0.1353352832366127;

TEST_CASE("coherent state: vacuum at alpha=0") {
    const auto cs = hilbert::coherent_state(0.0, Cutoff(10));
    CHECK(cs.tail_mass == 0.0);
    CHECK(cs.field.amps(0) == Complex(1.0, 0.0));
    for (int n = 1; n <= 10; ++n)
        CHECK(cs.field.amps(n) == Complex(0.0, 0.0));
}

TEST_CASE("coherent state: series amplitude and displacement cross-check at alpha=1") {
    const Cutoff cutoff(30);
    const auto cs = hilbert::coherent_state(1.0, cutoff);
    CHECK(cs.field.amps(0).real() == doctest::Approx(kExpMinusHalf).epsilon(1e-13));
    CHECK(cs.tail_mass >= 0.0);
    CHECK(cs.tail_mass < 1e-12);

    // Independent route: truncated exp(alpha a^dag - alpha* a) applied to vacuum.
    const auto d = hilbert::displacement_operator(1.0, cutoff);
    const Vector displaced = d.mat * hilbert::fock_state(0, cutoff).amps;
    CHECK((displaced - cs.field.amps).norm() < 1e-10);
}

TEST_CASE("coherent state: overlap <alpha|-alpha> equals exp(-2 alpha^2)") {
    const Cutoff cutoff(30);
    const auto plus = hilbert::coherent_state(1.0, cutoff);
    const auto minus = hilbert::coherent_state(-1.0, cutoff);
    const Complex overlap = hilbert::inner(plus.field, minus.field);
    CHECK(overlap.real() == doctest::Approx(kExpMinus2).epsilon(1e-12));
    CHECK(std::abs(overlap.imag()) < 1e-15);

    // Property: random real alpha at the auto cutoff.
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> alphas(0.0, 3.0);
    for (int trial = 0; trial < 12; ++trial) {
        const double a = alphas(rng);
        const Cutoff c = Cutoff::for_alpha(a);
        const auto p = hilbert::coherent_state(a, c);
        const auto m = hilbert::coherent_state(-a, c);
        CHECK(p.tail_mass < 1e-12);
        CHECK(std::abs(hilbert::norm(p.field) - 1.0) < 1e-12);
        CHECK(std::abs(hilbert::inner(p.field, m.field).real() - std::exp(-2.0 * a * a)) < 1e-10);
    }
}

TEST_CASE("coherent state: cutoff guard rejects |alpha|^2 > n_max") {
    CHECK_THROWS_AS((void)hilbert::coherent_state(6.0, Cutoff(30)), numeric_error);
    CHECK_THROWS_AS((void)hilbert::coherent_state(Complex(0.0, 6.0), Cutoff(30)), numeric_error);
}

TEST_CASE("ladder operators: matrix elements and number identity") {
    SUBCASE("single excitation") {
        const auto ops = hilbert::ladder_operators(Cutoff(1));
        CHECK(ops.a.mat(0, 1) == Complex(1.0, 0.0));
        CHECK(ops.a.mat(0, 0) == Complex(0.0, 0.0));
        CHECK(ops.a.mat(1, 0) == Complex(0.0, 0.0));
        CHECK(ops.a.mat(1, 1) == Complex(0.0, 0.0));
    }
    SUBCASE("number eigenvalue") {
        const auto ops = hilbert::ladder_operators(Cutoff(3));
        const Vector two = hilbert::fock_state(2, Cutoff(3)).amps;
        const Vector result = ops.a_dagger.mat * (ops.a.mat * two);
        CHECK((result - 2.0 * two).norm() < 1e-15);
    }
    SUBCASE("a^dag a equals number at n_max=20") {
        // Truncation-exact identity. The floating-point floor is the 1-ulp
        // error of fl(sqrt(n))^2, about 3e-14 at n=128, so equality is
        // asserted at 1e-13 rather than literally zero.
        const auto ops = hilbert::ladder_operators(Cutoff(20));
        CHECK(testutil::max_abs(ops.a_dagger.mat * ops.a.mat - ops.number.mat) < 1e-13);
        // a a^dag by contrast carries a genuine truncation artifact in the
        // corner: the (20,20) entry is 0 instead of 21.
        const Eigen::MatrixXcd aad = ops.a.mat * ops.a_dagger.mat;
        CHECK(aad(20, 20) == Complex(0.0, 0.0));
    }
}

TEST_CASE("atom operators: 2x2 algebra in the (g,e) ordering") {
    const auto ops = hilbert::atom_operators();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    CHECK(testutil::max_abs(ops.sigma_x.mat * ops.sigma_x.mat - id) == 0.0);
    CHECK(testutil::max_abs(ops.sigma_plus.mat * ops.sigma_minus.mat +
                            ops.sigma_minus.mat * ops.sigma_plus.mat - id) == 0.0);
    CHECK(testutil::max_abs(ops.sigma_plus.mat * ops.sigma_minus.mat -
                            ops.sigma_minus.mat * ops.sigma_plus.mat - ops.sigma_z.mat) == 0.0);
    CHECK(testutil::max_abs(ops.sigma_plus.mat + ops.sigma_minus.mat - ops.sigma_x.mat) == 0.0);
    // sigma_z|e> = +|e>, sigma_z|g> = -|g>, sigma_plus|g> = |e>
    CHECK(ops.sigma_z.mat(0, 0) == Complex(-1.0, 0.0));
    CHECK(ops.sigma_z.mat(1, 1) == Complex(1.0, 0.0));
    CHECK(ops.sigma_plus.mat(1, 0) == Complex(1.0, 0.0));
}

TEST_CASE("tensor products: basis ordering and operator action") {
    const Cutoff cutoff(4);
    const auto atoms = hilbert::atom_operators();
    const auto ladder = hilbert::ladder_operators(cutoff);
    const hilbert::OperatorMatrix id_field(Eigen::MatrixXcd::Identity(5, 5), true);
    const hilbert::OperatorMatrix id_atom(Eigen::MatrixXcd::Identity(2, 2), true);
    const Eigen::Vector2cd g(1.0, 0.0), e(0.0, 1.0);

    SUBCASE("|g> ⊗ |0> sits at joint index 0") {
        const auto joint = hilbert::tensor(g, hilbert::fock_state(0, cutoff));
        CHECK(joint.amps(0) == Complex(1.0, 0.0));
        CHECK(joint.amps.tail(9).norm() == 0.0);
    }
    SUBCASE("(sigma_z ⊗ I)(|e> ⊗ |alpha>) = +|e> ⊗ |alpha>") {
        const auto alpha = hilbert::coherent_state(0.9, cutoff);
        const auto joint = hilbert::tensor(e, alpha.field);
        const auto op = hilbert::tensor(atoms.sigma_z, id_field);
        CHECK((op.mat * joint.amps - joint.amps).norm() == 0.0);
    }
    SUBCASE("(I ⊗ a)(|g> ⊗ |1>) = |g> ⊗ |0>") {
        const auto in = hilbert::tensor(g, hilbert::fock_state(1, cutoff));
        const auto out = hilbert::tensor(g, hilbert::fock_state(0, cutoff));
        const auto op = hilbert::tensor(id_atom, ladder.a);
        CHECK((op.mat * in.amps - out.amps).norm() == 0.0);
    }
    SUBCASE("dimension mismatch rejected") {
        CHECK_THROWS_AS((void)hilbert::tensor(g, hilbert::FieldVector(Vector::Zero(3), Cutoff(2), false)),
                        std::invalid_argument);
        // (a 3-component field against cutoff 4 cannot even be constructed)
        CHECK_THROWS_AS(hilbert::FieldVector(Vector::Zero(3), cutoff, false),
                        std::invalid_argument);
    }
    SUBCASE("property: (A ⊗ B)(u ⊗ v) = (Au) ⊗ (Bv)") {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 8; ++trial) {
            const Eigen::MatrixXcd a2 = testutil::random_matrix(2, 2, rng);
            const Eigen::MatrixXcd bf = testutil::random_matrix(5, 5, rng);
            const Eigen::Vector2cd u = testutil::random_vector(2, rng);
            const Vector v = testutil::random_vector(5, rng);
            const auto op = hilbert::tensor(hilbert::OperatorMatrix(a2, false),
                                            hilbert::OperatorMatrix(bf, false));
            const hilbert::FieldVector field(v, cutoff, false);
            const Vector lhs = op.mat * hilbert::tensor(u, field).amps;
            const hilbert::FieldVector bv(bf * v, cutoff, false);
            const Vector rhs = hilbert::tensor(Eigen::Vector2cd(a2 * u), bv).amps;
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("inner products, norms, normalize") {
    const Cutoff cutoff(10);
    const auto zero = hilbert::fock_state(0, cutoff);
    CHECK(hilbert::inner(zero, zero) == Complex(1.0, 0.0));

    const auto one = hilbert::coherent_state(1.0, Cutoff(30));
    const auto vac = hilbert::coherent_state(0.0, Cutoff(30));
    CHECK(hilbert::inner(one.field, vac.field).real() ==
          doctest::Approx(kExpMinusHalf).epsilon(1e-13));

    // Conjugate-linearity in the first argument.
    const Vector u = (Vector(2) << Complex(0.0, 1.0), 0.0).finished();
    const Vector v = (Vector(2) << 1.0, 0.0).finished();
    CHECK(hilbert::inner(u, v) == Complex(0.0, -1.0));

    const auto scaled = hilbert::FieldVector(2.5 * zero.amps, cutoff, false);
    const auto unit = hilbert::normalize(scaled);
    CHECK(unit.scale == doctest::Approx(0.4));
    CHECK(std::abs(hilbert::norm(unit.state) - 1.0) < 1e-15);

    CHECK_THROWS_AS((void)hilbert::normalize(hilbert::FieldVector(Vector::Zero(11), cutoff, false)),
                    degenerate_error);
}

TEST_CASE("flags are enforced at construction") {
    const Cutoff cutoff(3);
    CHECK_THROWS_AS(hilbert::FieldVector(2.0 * hilbert::fock_state(0, cutoff).amps, cutoff, true),
                    std::invalid_argument);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = Complex(0.0, 1.0);   // not Hermitian
    CHECK_THROWS_AS(hilbert::OperatorMatrix(m, true), std::invalid_argument);
    CHECK_NOTHROW(hilbert::OperatorMatrix(m, false));
    CHECK_THROWS_AS(Cutoff(-1), std::invalid_argument);
}

TEST_CASE("cutoff policy keeps the coherent tail below 1e-12 up to alpha=4") {
    for (const double a : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
        const Cutoff c = Cutoff::for_alpha(a);
        CHECK(hilbert::coherent_state(a, c).tail_mass < 1e-12);
    }
    CHECK(Cutoff::for_alpha(1.0).n_max == 31);
    CHECK(Cutoff::for_alpha(-1.0).n_max == 31);
}

TEST_CASE("displacement operator is unitary on the truncated space") {
    const Cutoff cutoff(24);
    const auto d = hilbert::displacement_operator(Complex(0.7, -0.3), cutoff);
    const Eigen::MatrixXcd should_be_id = d.mat.adjoint() * d.mat;
    CHECK(testutil::max_abs(should_be_id - Eigen::MatrixXcd::Identity(25, 25)) < 1e-13);
}

TEST_CASE("amplitude files round-trip bit-exactly") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "catgen_ampio_test";
    fs::create_directories(dir);
    const fs::path file = dir / "state.amp";

    std::mt19937_64 rng(second_arg_seed: 0);
    (void)0;
}
