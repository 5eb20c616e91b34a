#pragma once

// Independent dense constructions used as test oracles.

#include "lmg/model.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

// Basis index n = M + J, 0 <= n <= 2J.
inline Eigen::MatrixXd jz(int two_j) {
    const int dim = two_j + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) m(n, n) = n - 0.5 * two_j;
    return m;
}

inline Eigen::MatrixXd jplus(int two_j) {
    const int dim = two_j + 1;
    const double j = 0.5 * two_j;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double mm = n - j;
        m(n + 1, n) = std::sqrt(j * (j + 1) - mm * (mm + 1));
    }
    return m;
}

inline Eigen::MatrixXd jminus(int two_j) { return jplus(two_j).transpose(); }

inline Eigen::MatrixXd hamiltonian(const lmg::ModelParams& p) {
    const int two_j = p.n_particles();
    const Eigen::MatrixXd jp = jplus(two_j);
    const Eigen::MatrixXd jm = jminus(two_j);
    return p.epsilon() * jz(two_j) - 0.5 * p.coupling() * (jp * jp + jm * jm);
}

// exp(+i beta Jy) is real: i Jy = (J+ - J-)/2.
inline Eigen::MatrixXd rotation(int two_j, double beta) {
    const Eigen::MatrixXd generator = 0.5 * beta * (jplus(two_j) - jminus(two_j));
    return generator.exp();
}

inline Eigen::MatrixXd effective(const lmg::ModelParams& p, double beta, int cutoff) {
    const Eigen::MatrixXd r = rotation(p.n_particles(), beta).leftCols(cutoff);
    return r.transpose() * hamiltonian(p) * r;
}

inline Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::VectorXd e = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
    std::sort(e.data(), e.data() + e.size());
    return e;
}

inline double ground_energy(const Eigen::MatrixXd& m) { return sorted_eigenvalues(m)(0); }

// Central difference of a scalar function.
template <class F>
double derivative(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

inline Eigen::VectorXd random_unit(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal(gen);
    return v.normalized();
}

inline Eigen::MatrixXd random_symmetric(int dim, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(gen);
    return m;
}

}  // namespace oracle
