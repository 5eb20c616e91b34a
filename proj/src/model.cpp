#include "lmg/model.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace lmg {

ModelParams::ModelParams(int n, double eps, double v) : n_particles_(n), epsilon_(eps), coupling_(v) {
    if (n < 2) throw ConfigError("particle number must be >= 2, got " + std::to_string(n));
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("epsilon must be positive and finite");
    if (!std::isfinite(v)) throw ConfigError("coupling must be finite");
}

ModelParams ModelParams::from_vbar(int n_particles, double epsilon, double vbar) {
    if (n_particles < 2) throw ConfigError("particle number must be >= 2, got " + std::to_string(n_particles));
    return ModelParams(n_particles, epsilon, vbar * epsilon / (n_particles - 1));
}

ModelParams ModelParams::from_coupling(int n_particles, double epsilon, double coupling) {
    return ModelParams(n_particles, epsilon, coupling);
}

namespace {

void check_cutoff(const ModelParams& p, int cutoff) {
    if (cutoff < 1 || cutoff > p.dimension()) {
        std::ostringstream os;
        os << "cutoff " << cutoff << " outside [1, " << p.dimension() << "]";
        throw ConfigError(os.str());
    }
}

// sqrt((N-n)(n+1)(N-n-1)(n+2)): the n -> n+2 pair-excitation factor.
double pair_factor(int big_n, int n) {
    return std::sqrt(double(big_n - n) * (n + 1) * (big_n - n - 1) * (n + 2));
}

// sqrt((N-n)(n+1)): the n -> n+1 single-excitation factor.
double single_factor(int big_n, int n) { return std::sqrt(double(big_n - n) * (n + 1)); }

}  // namespace

Matrix full_hamiltonian(const ModelParams& params) {
    const int big_n = params.n_particles();
    const double eps = params.epsilon();
    const double v = params.coupling();
    Matrix h = Matrix::Zero(big_n + 1, big_n + 1);
    for (int n = 0; n <= big_n; ++n) {
        h(n, n) = eps * (n - 0.5 * big_n);
        if (n + 2 <= big_n) {
            const double off = -0.5 * v * pair_factor(big_n, n);
            h(n + 2, n) = off;
            h(n, n + 2) = off;
        }
    }
    return h;
}

Matrix effective_hamiltonian(const ModelParams& params, double beta, int cutoff) {
    check_cutoff(params, cutoff);
    const int big_n = params.n_particles();
    const double eps = params.epsilon();
    const double v = params.coupling();
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    Matrix h = Matrix::Zero(cutoff, cutoff);
    for (int n = 0; n < cutoff; ++n) {
        const double quad = double(big_n) * big_n + 6.0 * n * n - 6.0 * n * big_n - big_n;
        h(n, n) = eps * c * (n - 0.5 * big_n) - 0.25 * v * s * s * quad;
        if (n + 1 < cutoff) {
            const double off = 0.5 * single_factor(big_n, n) * s * (eps - v * c * (big_n - 2 * n - 1));
            h(n + 1, n) = off;
            h(n, n + 1) = off;
        }
        if (n + 2 < cutoff) {
            const double off = -0.25 * v * (1.0 + c * c) * pair_factor(big_n, n);
            h(n + 2, n) = off;
            h(n, n + 2) = off;
        }
    }
    return h;
}

Matrix effective_hamiltonian_derivative(const ModelParams& params, double beta, int cutoff) {
    check_cutoff(params, cutoff);
    const int big_n = params.n_particles();
    const double eps = params.epsilon();
    const double v = params.coupling();
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const double s2 = std::sin(2.0 * beta);
    const double c2 = std::cos(2.0 * beta);
    Matrix h = Matrix::Zero(cutoff, cutoff);
    for (int n = 0; n < cutoff; ++n) {
        const double quad = double(big_n) * big_n + 6.0 * n * n - 6.0 * n * big_n - big_n;
        h(n, n) = -eps * s * (n - 0.5 * big_n) - 0.25 * v * s2 * quad;
        if (n + 1 < cutoff) {
            const double off = 0.5 * single_factor(big_n, n) * (eps * c - v * c2 * (big_n - 2 * n - 1));
            h(n + 1, n) = off;
            h(n, n + 1) = off;
        }
        if (n + 2 < cutoff) {
            const double off = 0.25 * v * s2 * pair_factor(big_n, n);
            h(n + 2, n) = off;
            h(n, n + 2) = off;
        }
    }
    return h;
}

Eigenpair lowest_eigenpair(const Matrix& matrix) {
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) throw NumericalError("eigensolver needs a non-empty square matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");
    Eigenpair out{solver.eigenvalues()(0), solver.eigenvectors().col(0)};
    for (Eigen::Index i = 0; i < out.vector.size(); ++i) {
        if (std::abs(out.vector(i)) > 1e-14) {
            if (out.vector(i) < 0) out.vector = -out.vector;
            break;
        }
    }
    return out;
}

Eigenpair exact_ground_state(const ModelParams& params) {
    const Matrix full = full_hamiltonian(params);
    const int dim = params.dimension();
    const int even_dim = (dim + 1) / 2;
    Matrix even(even_dim, even_dim);
    for (int i = 0; i < even_dim; ++i)
        for (int j = 0; j < even_dim; ++j) even(i, j) = full(2 * i, 2 * j);
    const Eigenpair block = lowest_eigenpair(even);
    Vector vec = Vector::Zero(dim);
    for (int i = 0; i < even_dim; ++i) vec(2 * i) = block.vector(i);
    const double residual = (full * vec - block.energy * vec).norm();
    if (!(residual < 1e-8 * (1.0 + std::abs(block.energy)))) throw NumericalError("exact ground state residual too large");
    return {block.energy, vec};
}

double quasi_spin_element(int two_j, QuasiSpin kind, int n_row, int n_col) {
    if (two_j < 0) throw ConfigError("2J must be non-negative");
    if (n_row < 0 || n_row > two_j || n_col < 0 || n_col > two_j) throw ConfigError("basis label outside [0, 2J]");
    const double j = 0.5 * two_j;
    const double m = n_col - j;
    const double jj = j * (j + 1.0);
    const int dn = n_row - n_col;
    auto ladder = [jj](double mm, int sign) { return std::sqrt(std::max(0.0, jj - mm * (mm + sign))); };
    switch (kind) {
        case QuasiSpin::Jz: return dn == 0 ? m : 0.0;
        case QuasiSpin::Jz2: return dn == 0 ? m * m : 0.0;
        case QuasiSpin::Jplus: return dn == 1 ? ladder(m, 1) : 0.0;
        case QuasiSpin::Jminus: return dn == -1 ? ladder(m, -1) : 0.0;
        case QuasiSpin::Jplus2: return dn == 2 ? ladder(m, 1) * ladder(m + 1, 1) : 0.0;
        case QuasiSpin::Jminus2: return dn == -2 ? ladder(m, -1) * ladder(m - 1, -1) : 0.0;
        case QuasiSpin::JzJplus: return dn == 1 ? (2.0 * m + 1.0) * ladder(m, 1) : 0.0;
        case QuasiSpin::JzJminus: return dn == -1 ? (2.0 * m - 1.0) * ladder(m, -1) : 0.0;
        case QuasiSpin::JplusJminus: return dn == 0 ? 2.0 * jj - 2.0 * m * m : 0.0;
    }
    throw ConfigError("unknown quasi-spin operator");
}

QuasiSpin parse_quasi_spin(const std::string& name) {
    static const std::pair<const char*, QuasiSpin> table[] = {
        {"Jz", QuasiSpin::Jz},         {"J+", QuasiSpin::Jplus},          {"J-", QuasiSpin::Jminus},
        {"Jz2", QuasiSpin::Jz2},       {"J+2", QuasiSpin::Jplus2},        {"J-2", QuasiSpin::Jminus2},
        {"{Jz,J+}", QuasiSpin::JzJplus}, {"{Jz,J-}", QuasiSpin::JzJminus}, {"{J+,J-}", QuasiSpin::JplusJminus},
    };
    for (const auto& [key, value] : table)
        if (name == key) return value;
    throw ConfigError("unknown quasi-spin operator '" + name + "'");
}

}  // namespace lmg
