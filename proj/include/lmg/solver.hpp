#pragma once

#include "lmg/model.hpp"
#include "lmg/rotations.hpp"

#include <vector>

namespace lmg {

struct SolverOptions {
    int grid_points = 64;      // coarse beta scan over [0, pi/2]
    int starts = 3;            // best grid points refined locally
    int max_iterations = 200;  // per local refinement
    bool derivative_polish = true;
};

struct EffectiveSolution {
    double beta = 0.0;
    double energy = 0.0;
    EffectiveState state;
    double projected_energy = 0.0;  // <Psi_+|H|Psi_+> in the full basis, signed
    double effective_excess = 0.0;  // energy - exact ground energy
    double projected_excess = 0.0;  // projected_energy - exact ground energy
    double bures = 0.0;             // projected reconstruction vs exact ground state
    double bures_beta0 = 0.0;       // beta = 0 truncation vs exact ground state
};

// <s|H|s> - E for a normalized full-space state s and an exact eigenpair (E, g) of H,
// evaluated as <d|(H - E)|d> with d = s - <g|s> g so nearby states lose no digits.
double energy_excess(const Matrix& hamiltonian, const Eigenpair& exact, const Vector& state);

// Energy and lowest eigenvector of the cutoff-truncated H(beta).
Eigenpair effective_ground(const ModelParams& params, double beta, int cutoff);

// dE/dbeta of the lowest eigenvalue by the Hellmann-Feynman relation.
double effective_energy_slope(const ModelParams& params, double beta, int cutoff);

EffectiveSolution solve_effective(const ModelParams& params, int cutoff, const SolverOptions& opts = {});

// Mean-field angle: arccos(1/vbar) in the deformed phase, 0 otherwise.
double hf_beta(const ModelParams& params);

// Which ground energy the convergence rows are measured against.
// `truncated_n` measures against the naive truncation to n <= N-1 (dimension N).
enum class ReferenceSpace { full, truncated_n };

struct SweepOptions {
    SolverOptions solver;
    ReferenceSpace reference = ReferenceSpace::full;
};

struct ConvergenceRow {
    int cutoff = 0;
    double delta_e_naive = 0.0;
    double delta_e_effective = 0.0;
    double delta_e_projected = 0.0;
    double beta = 0.0;
};

std::vector<ConvergenceRow> sweep_lambda(const ModelParams& params, const std::vector<int>& cutoffs,
                                         const SweepOptions& opts = {}, Execution exec = Execution::parallel);

struct VbarPoint {
    double vbar = 0.0;
    double relative_error_percent = 0.0;
};

std::vector<VbarPoint> sweep_vbar(int n_particles, double epsilon, int cutoff, const std::vector<double>& vbar_grid,
                                  const SolverOptions& opts = {}, Execution exec = Execution::parallel);

}  // namespace lmg
