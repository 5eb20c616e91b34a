#pragma once

#include "lmg/pauli.hpp"
#include "lmg/qsim.hpp"
#include "lmg/rotations.hpp"

#include <optional>
#include <vector>

namespace lmg {

// clipped divides by max(G, 1): normalized far from the optimum, plain near it.
enum class UpdateRule { normalized, plain, clipped };

// Inclusive range of 1-based iteration steps.
struct StepWindow {
    int first = 70;
    int last = 80;

    friend bool operator==(const StepWindow&, const StepWindow&) = default;
};

struct HlvqeOptions {
    double learning_rate = 0.07;
    int max_iterations = 80;
    Backend backend = Backend::analytic();
    double init_beta = 0.0;
    std::vector<double> init_theta;  // empty means all zeros
    StepWindow window;
    UpdateRule update = UpdateRule::normalized;
    std::optional<double> energy_tolerance;  // early exit on |E_k - E_{k-1}|
    bool optimize_beta = true;

    void validate(int cutoff) const;
};

struct CostAndGrads {
    double energy = 0.0;
    double grad_beta = 0.0;
    std::vector<double> grad_theta;
};

// E = sum_P h_P <P>, G_beta = sum_P dh_P <P>, G_theta_i = sum_P h_P d<P>/dtheta_i.
// Identity strings contribute to E and G_beta only. A null derivative skips G_beta.
CostAndGrads evaluate_terms(const PauliDecomposition& value, const PauliDecomposition* derivative,
                            std::span<const double> theta, const Backend& backend, Rng* rng = nullptr);

CostAndGrads cost_and_grads(const ModelParams& params, int cutoff, double beta, std::span<const double> theta,
                            const Backend& backend, Rng* rng = nullptr);

struct IterationRecord {
    int step = 0;
    double beta = 0.0;
    std::vector<double> theta;
    double energy = 0.0;
    double grad_beta = 0.0;
    std::vector<double> grad_theta;
    double grad_norm = 0.0;
    std::vector<double> amplitudes;  // |A_n| of the prepared register state
    double bures = 0.0;              // parity-projected reconstruction vs exact ground state
};

struct RunResult {
    std::vector<IterationRecord> trace;
    bool converged_early = false;
};

RunResult run(const ModelParams& params, int cutoff, const HlvqeOptions& opts);

// One run per seed with otherwise identical options; results follow the order of `seeds`.
std::vector<RunResult> run_ensemble(const ModelParams& params, int cutoff, const HlvqeOptions& opts,
                                    const std::vector<std::uint64_t>& seeds, Execution exec = Execution::parallel);

struct Spread {
    double mean = 0.0;
    double half_range = 0.0;
};

struct RunSummary {
    Spread energy;
    Spread beta;
    std::vector<Spread> amplitudes;
    Spread bures;
};

RunSummary summarize(const std::vector<IterationRecord>& trace, StepWindow window);

// h'_P = h_P + mu0 / 2^n <Psi|P|Psi>, i.e. H + mu0 |Psi><Psi| in Pauli form.
PauliDecomposition excited_hamiltonian(const PauliDecomposition& decomposition, const StateVector& ground, double mu0);

struct ExcitedResult {
    PauliDecomposition hamiltonian;
    RunResult run;
    double ground_overlap = 0.0;  // |<ground|excited>| at the last step
};

// Theta-only descent on H + mu0 |ground><ground| at fixed beta.
ExcitedResult run_excited(const ModelParams& params, int cutoff, double beta, std::span<const double> ground_theta,
                          double mu0, const HlvqeOptions& opts);

}  // namespace lmg
