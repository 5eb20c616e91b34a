#pragma once

#include "lmg/model.hpp"

namespace lmg {

enum class Execution { serial, parallel };

enum class Parity { even, odd };

// Truncated variational state: amplitudes over the first `cutoff` rotated basis states.
struct EffectiveState {
    int cutoff = 0;
    double beta = 0.0;
    Vector amplitudes;
};

// State over all N+1 unrotated basis states.
struct FullState {
    int n_particles = 0;
    Vector amplitudes;
};

// d^J_{m_row, m_col}(beta) with J = two_j/2, M' = two_m_row/2, M = two_m_col/2.
// The series is summed in quad precision; supported for 2J <= 160, where it stays accurate to 1e-12.
double wigner_small_d(int two_j, int two_m_row, int two_m_col, double beta);

// Columns 0..columns-1 of d^J(beta) for J = two_j/2, indexed by n = M + J.
// A negative column count means all 2J+1 columns.
Matrix wigner_d_matrix(int two_j, double beta, int columns = -1, Execution exec = Execution::parallel);

FullState reconstruct_full(const EffectiveState& state, const ModelParams& params);

FullState project_parity(const FullState& state, Parity sector);

double bures_distance(const FullState& a, const FullState& b);

// <psi| H_full |psi> for a full-space state.
double full_space_energy(const ModelParams& params, const FullState& state);

}  // namespace lmg
