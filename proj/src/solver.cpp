#include "lmg/solver.hpp"
#include "parallel.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>

namespace lmg {

double energy_excess(const Matrix& hamiltonian, const Eigenpair& exact, const Vector& state) {
    const Vector d = state - state.dot(exact.vector) * exact.vector;
    return d.dot(hamiltonian * d) - exact.energy * d.squaredNorm();
}

Eigenpair effective_ground(const ModelParams& params, double beta, int cutoff) {
    return lowest_eigenpair(effective_hamiltonian(params, beta, cutoff));
}

double effective_energy_slope(const ModelParams& params, double beta, int cutoff) {
    const Eigenpair g = effective_ground(params, beta, cutoff);
    return g.vector.dot(effective_hamiltonian_derivative(params, beta, cutoff) * g.vector);
}

double hf_beta(const ModelParams& params) {
    const double vbar = params.vbar();
    return vbar > 1.0 ? std::acos(1.0 / vbar) : 0.0;
}

namespace {

constexpr double kBetaMax = std::numbers::pi / 2;

struct Candidate {
    double beta;
    double energy;
};

// Root of the Hellmann-Feynman slope near a located minimum. Energy differences on
// flat landscapes fall below double resolution long before the slope does.
Candidate polish(const ModelParams& params, int cutoff, Candidate best, double half_width) {
    const double lo = std::max(0.0, best.beta - half_width);
    const double hi = std::min(kBetaMax, best.beta + half_width);
    const auto slope = [&](double b) { return effective_energy_slope(params, b, cutoff); };
    const double s_lo = slope(lo);
    const double s_hi = slope(hi);
    if (!(s_lo < 0.0 && s_hi > 0.0)) return best;
    std::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(slope, lo, hi, s_lo, s_hi,
                                                          boost::math::tools::eps_tolerance<double>(50), iters);
    const double root = 0.5 * (a + b);
    const double e = effective_ground(params, root, cutoff).energy;
    const double slack = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(best.energy));
    if (e <= best.energy + slack) return {root, e};
    return best;
}

}  // namespace

EffectiveSolution solve_effective(const ModelParams& params, int cutoff, const SolverOptions& opts) {
    if (cutoff < 1 || cutoff > params.dimension()) throw ConfigError("cutoff outside [1, N+1]");
    if (opts.grid_points < 3 || opts.starts < 1) throw ConfigError("solver needs >= 3 grid points and >= 1 start");

    const auto energy = [&](double b) { return effective_ground(params, b, cutoff).energy; };
    const int g = opts.grid_points;
    const double step = kBetaMax / (g - 1);
    std::vector<Candidate> grid(g);
    for (int i = 0; i < g; ++i) grid[i] = {i * step, energy(i * step)};

    std::vector<int> order(g);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return grid[a].energy < grid[b].energy; });

    Candidate best = grid[0];
    for (int k = 0; k < std::min(opts.starts, g); ++k) {
        const int i = order[k];
        if (grid[i].energy < best.energy) best = grid[i];
        const double lo = grid[std::max(i - 1, 0)].beta;
        const double hi = grid[std::min(i + 1, g - 1)].beta;
        std::uintmax_t iters = opts.max_iterations;
        const auto [b, e] = boost::math::tools::brent_find_minima(energy, lo, hi, std::numeric_limits<double>::digits / 2, iters);
        if (iters >= static_cast<std::uintmax_t>(opts.max_iterations))
            throw NumericalError("beta refinement did not converge for cutoff " + std::to_string(cutoff));
        if (e < best.energy) best = {b, e};
    }
    if (opts.derivative_polish && best.beta > 0.0) best = polish(params, cutoff, best, step);
    // The whole band is rotation invariant; any angle is optimal.
    if (cutoff == params.dimension()) best = {0.0, energy(0.0)};

    const Eigenpair exact = exact_ground_state(params);
    const Matrix full = full_hamiltonian(params);
    const Eigenpair naive = lowest_eigenpair(full.topLeftCorner(cutoff, cutoff));
    FullState naive_state{params.n_particles(), Vector::Zero(params.dimension())};
    naive_state.amplitudes.head(cutoff) = naive.vector;
    const double naive_excess = energy_excess(full, exact, naive_state.amplitudes);

    // Eigenvalue differences near the merged phase sit at rounding level; decide
    // against beta = 0 with the excess over the exact ground state instead.
    double excess = naive_excess;
    if (best.beta > 0.0) {
        const Eigenpair g = effective_ground(params, best.beta, cutoff);
        excess = energy_excess(full, exact, reconstruct_full({cutoff, best.beta, g.vector}, params).amplitudes);
        if (naive_excess <= excess * (1.0 + 1e-12)) {
            best = {0.0, naive.energy};
            excess = naive_excess;
        }
    }

    EffectiveSolution sol;
    const Eigenpair ground = effective_ground(params, best.beta, cutoff);
    sol.beta = best.beta;
    sol.energy = ground.energy;
    sol.state = {cutoff, best.beta, ground.vector};

    const FullState exact_state{params.n_particles(), exact.vector};
    const FullState projected = project_parity(reconstruct_full(sol.state, params), Parity::even);
    sol.projected_excess = energy_excess(full, exact, projected.amplitudes);
    sol.projected_energy = exact.energy + sol.projected_excess;
    sol.effective_excess = excess;
    sol.bures = bures_distance(projected, exact_state);
    sol.bures_beta0 = bures_distance(naive_state, exact_state);
    return sol;
}

namespace {

Vector padded(const Vector& head, int dim) {
    Vector v = Vector::Zero(dim);
    v.head(head.size()) = head;
    return v;
}

template <class Fn>
auto annotated(int cutoff, const Fn& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        throw ConfigError("cutoff " + std::to_string(cutoff) + ": " + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError("cutoff " + std::to_string(cutoff) + ": " + e.what());
    }
}

}  // namespace

std::vector<ConvergenceRow> sweep_lambda(const ModelParams& params, const std::vector<int>& cutoffs,
                                         const SweepOptions& opts, Execution exec) {
    if (!std::is_sorted(cutoffs.begin(), cutoffs.end())) throw ConfigError("cutoffs must be sorted ascending");
    const Matrix full = full_hamiltonian(params);
    const Eigenpair exact = exact_ground_state(params);
    const int dim = params.dimension();
    const auto naive_excess = [&](int cutoff) {
        return energy_excess(full, exact, padded(lowest_eigenpair(full.topLeftCorner(cutoff, cutoff)).vector, dim));
    };
    const double ref_excess = opts.reference == ReferenceSpace::full ? 0.0 : naive_excess(params.n_particles());
    std::vector<ConvergenceRow> rows(cutoffs.size());
    detail::for_each_index(static_cast<int>(cutoffs.size()), exec, [&](int i) {
        const int cutoff = cutoffs[i];
        rows[i] = annotated(cutoff, [&] {
            const EffectiveSolution sol = solve_effective(params, cutoff, opts.solver);
            return ConvergenceRow{cutoff, std::abs(naive_excess(cutoff) - ref_excess),
                                  std::abs(sol.effective_excess - ref_excess),
                                  std::abs(sol.projected_excess - ref_excess), sol.beta};
        });
    });
    return rows;
}

std::vector<VbarPoint> sweep_vbar(int n_particles, double epsilon, int cutoff, const std::vector<double>& vbar_grid,
                                  const SolverOptions& opts, Execution exec) {
    for (double v : vbar_grid)
        if (!(v > 0.0)) throw ConfigError("vbar grid values must be positive");
    std::vector<VbarPoint> out(vbar_grid.size());
    detail::for_each_index(static_cast<int>(vbar_grid.size()), exec, [&](int i) {
        const ModelParams p = ModelParams::from_vbar(n_particles, epsilon, vbar_grid[i]);
        const double exact = exact_ground_state(p).energy;
        const double e = annotated(cutoff, [&] { return solve_effective(p, cutoff, opts).energy; });
        out[i] = {vbar_grid[i], 100.0 * std::abs(exact - e) / std::abs(exact)};
    });
    return out;
}

}  // namespace lmg
