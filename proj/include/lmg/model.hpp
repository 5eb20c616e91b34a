#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace lmg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Invalid user-supplied parameters or configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An eigensolver or optimizer failed to produce a trustworthy result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One LMG instance: N particles, level splitting epsilon, pair-scattering strength V.
class ModelParams {
public:
    static ModelParams from_vbar(int n_particles, double epsilon, double vbar);
    static ModelParams from_coupling(int n_particles, double epsilon, double coupling);

    int n_particles() const { return n_particles_; }
    double epsilon() const { return epsilon_; }
    double coupling() const { return coupling_; }
    // Dimensionless interaction strength (N-1) V / epsilon.
    double vbar() const { return (n_particles_ - 1) * coupling_ / epsilon_; }
    int dimension() const { return n_particles_ + 1; }

private:
    ModelParams(int n, double eps, double v);
    int n_particles_;
    double epsilon_;
    double coupling_;
};

// (N+1)x(N+1) Hamiltonian in the unrotated n-particle n-hole basis.
Matrix full_hamiltonian(const ModelParams& params);

// Hamiltonian in the first `cutoff` rotated basis states |n, beta>.
Matrix effective_hamiltonian(const ModelParams& params, double beta, int cutoff);

// Elementwise beta-derivative of effective_hamiltonian.
Matrix effective_hamiltonian_derivative(const ModelParams& params, double beta, int cutoff);

struct Eigenpair {
    double energy;
    Vector vector;
};

// Lowest eigenpair of a symmetric matrix; the first nonzero component is made positive.
Eigenpair lowest_eigenpair(const Matrix& matrix);

// Ground state of the full Hamiltonian restricted to the even-n sector.
// Odd-n components of the returned vector are exactly zero.
Eigenpair exact_ground_state(const ModelParams& params);

enum class QuasiSpin { Jz, Jplus, Jminus, Jz2, Jplus2, Jminus2, JzJplus, JzJminus, JplusJminus };

// <n_row| O |n_col> for the collective operator O in the spin-J block, with J = two_j / 2.
// Anticommutators {Jz,J+-} and {J+,J-} are used for the mixed kinds.
double quasi_spin_element(int two_j, QuasiSpin kind, int n_row, int n_col);

QuasiSpin parse_quasi_spin(const std::string& name);

}  // namespace lmg
