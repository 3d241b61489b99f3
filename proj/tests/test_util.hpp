#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>

// Shared helpers for the unit suites. Generators are seeded per test so runs
// are reproducible.
namespace testutil {

inline Eigen::VectorXcd random_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i)
        v(i) = std::complex<double>(gauss(rng), gauss(rng));
    return v;
}

inline Eigen::VectorXcd random_state(int dim, std::mt19937_64& rng) {
    Eigen::VectorXcd v = random_vector(dim, rng);
    return v / v.norm();
}

inline Eigen::MatrixXcd random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return m;
}

inline double max_abs(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace testutil
