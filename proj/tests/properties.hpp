#pragma once

// Randomized invariants shared by the unit tests and the acceptance binary.

#include "lmg/pauli.hpp"
#include "lmg/qsim.hpp"
#include "lmg/rotations.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace props {

struct Result {
    std::string name;
    int cases = 0;
    double worst = 0.0;
    double tolerance = 0.0;

    bool ok() const { return cases >= 100 && worst <= tolerance; }
};

inline lmg::ModelParams random_model(std::mt19937_64& gen, int max_n) {
    std::uniform_int_distribution<int> n(2, max_n);
    std::uniform_real_distribution<double> vbar(0.1, 4.0);
    return lmg::ModelParams::from_vbar(n(gen), 1.0, vbar(gen));
}

// H(beta) on the whole band is a rotation of H, so the spectra coincide.
inline Result spectrum_equivalence(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    Result r{"unitary equivalence of spectra", 0, 0.0, 1e-9};
    for (int model = 0; model < 5; ++model) {
        const auto p = random_model(gen, 20);
        const auto reference = oracle::sorted_eigenvalues(lmg::full_hamiltonian(p));
        for (int k = 0; k < 20; ++k) {
            const auto rotated = oracle::sorted_eigenvalues(lmg::effective_hamiltonian(p, angle(gen), p.dimension()));
            r.worst = std::max(r.worst, (rotated - reference).cwiseAbs().maxCoeff());
            ++r.cases;
        }
    }
    return r;
}

inline Result wigner_orthogonality_composition(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> two_j(0, 96);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    Result r{"Wigner-d orthogonality and composition", 0, 0.0, 1e-9};
    for (int k = 0; k < 100; ++k) {
        const int tj = two_j(gen);
        const double a = angle(gen);
        const double b = angle(gen);
        const lmg::Matrix da = lmg::wigner_d_matrix(tj, a);
        const lmg::Matrix db = lmg::wigner_d_matrix(tj, b);
        const lmg::Matrix dab = lmg::wigner_d_matrix(tj, a + b);
        const double orth = (da.transpose() * da - lmg::Matrix::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff();
        const double comp = (da * db - dab).cwiseAbs().maxCoeff();
        r.worst = std::max({r.worst, orth, comp});
        ++r.cases;
    }
    return r;
}

inline Result pauli_round_trip(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> width(1, 6);
    Result r{"Pauli decomposition round trip", 0, 0.0, 1e-10};
    for (int k = 0; k < 100; ++k) {
        const int dim = 1 << width(gen);
        const lmg::Matrix m = oracle::random_symmetric(dim, gen);
        r.worst = std::max(r.worst, (lmg::reassemble(lmg::decompose(m)) - m).cwiseAbs().maxCoeff());
        ++r.cases;
    }
    return r;
}

inline lmg::PauliString random_real_string(int width, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> letter(0, 3);
    const lmg::Pauli letters[] = {lmg::Pauli::I, lmg::Pauli::X, lmg::Pauli::Y, lmg::Pauli::Z};
    for (;;) {
        std::vector<lmg::Pauli> ops(width);
        for (auto& o : ops) o = letters[letter(gen)];
        lmg::PauliString s(std::move(ops));
        if (s.y_count() % 2 == 0) return s;
    }
}

inline Result shift_rule_vs_finite_difference(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> width(1, 3);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const auto backend = lmg::Backend::analytic();
    const double h = 1e-5;
    Result r{"parameter shift vs finite difference", 0, 0.0, 1e-8};
    for (int k = 0; k < 100; ++k) {
        const int n_q = width(gen);
        std::vector<double> theta((1u << n_q) - 1);
        for (auto& t : theta) t = angle(gen);
        const auto ops = random_real_string(n_q, gen);
        const int index = std::uniform_int_distribution<int>(0, static_cast<int>(theta.size()) - 1)(gen);
        auto up = theta;
        auto down = theta;
        up[index] += h;
        down[index] -= h;
        const double fd = (lmg::measure_pauli(lmg::prepare_ansatz(up, n_q), ops, backend).value -
                           lmg::measure_pauli(lmg::prepare_ansatz(down, n_q), ops, backend).value) /
                          (2 * h);
        r.worst = std::max(r.worst, std::abs(lmg::parameter_shift_grad(theta, index, ops, backend) - fd));
        ++r.cases;
    }
    return r;
}

inline Result projection_idempotence(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> n(2, 40);
    Result r{"parity projection idempotence", 0, 0.0, 1e-12};
    for (int k = 0; k < 100; ++k) {
        const int particles = n(gen);
        const lmg::FullState s{particles, oracle::random_unit(particles + 1, gen)};
        const auto parity = k % 2 == 0 ? lmg::Parity::even : lmg::Parity::odd;
        const lmg::FullState once = lmg::project_parity(s, parity);
        const lmg::FullState twice = lmg::project_parity(once, parity);
        double err = (twice.amplitudes - once.amplitudes).cwiseAbs().maxCoeff();
        err = std::max(err, std::abs(once.amplitudes.norm() - 1.0));
        for (int m = parity == lmg::Parity::even ? 1 : 0; m <= particles; m += 2) err = std::max(err, std::abs(once.amplitudes(m)));
        r.worst = std::max(r.worst, err);
        ++r.cases;
    }
    return r;
}

inline std::vector<Result> all(std::uint64_t seed) {
    return {spectrum_equivalence(seed), wigner_orthogonality_composition(seed + 1), pauli_round_trip(seed + 2),
            shift_rule_vs_finite_difference(seed + 3), projection_idempotence(seed + 4)};
}

}  // namespace props
