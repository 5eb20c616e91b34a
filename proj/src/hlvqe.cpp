#include "lmg/hlvqe.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace lmg {

void HlvqeOptions::validate(int cutoff) const {
    if (!(learning_rate > 0.0)) throw ConfigError("learning rate must be positive");
    if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
    if (window.first < 1 || window.last < window.first || window.last > max_iterations)
        throw ConfigError("summary window must lie inside [1, max_iterations]");
    if (!init_theta.empty() && static_cast<int>(init_theta.size()) != cutoff - 1)
        throw ConfigError("initial theta needs cutoff - 1 = " + std::to_string(cutoff - 1) + " entries");
    if (energy_tolerance && !(*energy_tolerance > 0.0)) throw ConfigError("energy tolerance must be positive");
    if (backend.is_sampled() && backend.shots < 1) throw ConfigError("sampled backend needs shots >= 1");
}

namespace {

int register_width(int cutoff) {
    if (cutoff < 2 || (cutoff & (cutoff - 1)) != 0) throw ConfigError("HL-VQE needs a power-of-two cutoff >= 2");
    return std::countr_zero(static_cast<unsigned>(cutoff));
}

// Qubit-wise commuting groups share one measurement setting, the way a device run
// reads ZZ, ZI and IZ off the same histogram.
struct MeasurementGroup {
    PauliString basis;
    std::vector<std::size_t> members;
};

std::vector<MeasurementGroup> group_strings(const std::vector<PauliString>& strings) {
    std::vector<MeasurementGroup> groups;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        const PauliString& s = strings[i];
        if (s.is_identity()) continue;
        bool placed = false;
        for (auto& g : groups) {
            bool compatible = true;
            for (int q = 0; q < s.width() && compatible; ++q)
                compatible = s[q] == Pauli::I || g.basis[q] == Pauli::I || g.basis[q] == s[q];
            if (!compatible) continue;
            std::vector<Pauli> merged = g.basis.ops();
            for (int q = 0; q < s.width(); ++q)
                if (s[q] != Pauli::I) merged[q] = s[q];
            g.basis = PauliString(std::move(merged));
            g.members.push_back(i);
            placed = true;
            break;
        }
        if (!placed) groups.push_back({s, {i}});
    }
    return groups;
}

std::vector<double> expectations(const StateVector& psi, const std::vector<PauliString>& strings,
                                 const std::vector<MeasurementGroup>& groups, const Backend& backend, Rng& rng) {
    std::vector<double> out(strings.size(), 1.0);
    if (!backend.is_sampled()) {
        for (std::size_t i = 0; i < strings.size(); ++i)
            if (!strings[i].is_identity()) out[i] = measure_pauli(psi, strings[i], backend).value;
        return out;
    }
    for (const auto& g : groups) {
        const auto counts = sample_counts(rotate_to_measurement_basis(psi, g.basis), backend.shots, rng);
        std::vector<double> freq(counts.size());
        for (std::size_t k = 0; k < counts.size(); ++k) freq[k] = double(counts[k]) / double(backend.shots);
        for (std::size_t i : g.members) out[i] = expectation_from_probs(freq, strings[i]);
    }
    return out;
}

}  // namespace

CostAndGrads evaluate_terms(const PauliDecomposition& value, const PauliDecomposition* derivative,
                            std::span<const double> theta, const Backend& backend, Rng* rng) {
    const int n_q = value.n_qubits;
    if (derivative && derivative->n_qubits != n_q) throw ConfigError("derivative terms act on a different register");

    std::vector<PauliString> strings;
    std::map<std::string, std::size_t> index;
    const auto intern = [&](const PauliString& s) {
        if (s.width() != n_q) throw ConfigError("term width does not match register");
        auto [it, inserted] = index.emplace(s.str(), strings.size());
        if (inserted) strings.push_back(s);
        return it->second;
    };
    std::vector<std::size_t> value_ids, derivative_ids;
    for (const auto& t : value.terms) value_ids.push_back(intern(t.ops));
    if (derivative)
        for (const auto& t : derivative->terms) derivative_ids.push_back(intern(t.ops));
    const auto groups = group_strings(strings);

    Rng local(backend.seed);
    Rng& source = rng ? *rng : local;

    CostAndGrads out;
    const auto base = expectations(prepare_ansatz(theta, n_q), strings, groups, backend, source);
    for (std::size_t t = 0; t < value.terms.size(); ++t) out.energy += value.terms[t].coefficient * base[value_ids[t]];
    if (derivative)
        for (std::size_t t = 0; t < derivative->terms.size(); ++t)
            out.grad_beta += derivative->terms[t].coefficient * base[derivative_ids[t]];

    std::vector<double> shifted(theta.begin(), theta.end());
    out.grad_theta.assign(theta.size(), 0.0);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        shifted[i] = theta[i] + std::numbers::pi / 2;
        const auto plus = expectations(prepare_ansatz(shifted, n_q), strings, groups, backend, source);
        shifted[i] = theta[i] - std::numbers::pi / 2;
        const auto minus = expectations(prepare_ansatz(shifted, n_q), strings, groups, backend, source);
        shifted[i] = theta[i];
        for (std::size_t t = 0; t < value.terms.size(); ++t) {
            if (value.terms[t].ops.is_identity()) continue;
            const std::size_t id = value_ids[t];
            out.grad_theta[i] += value.terms[t].coefficient * 0.5 * (plus[id] - minus[id]);
        }
    }
    return out;
}

CostAndGrads cost_and_grads(const ModelParams& params, int cutoff, double beta, std::span<const double> theta,
                            const Backend& backend, Rng* rng) {
    register_width(cutoff);
    if (static_cast<int>(theta.size()) != cutoff - 1) throw ConfigError("theta needs cutoff - 1 entries");
    const PauliPair terms = hamiltonian_terms(params, beta, cutoff);
    return evaluate_terms(terms.value, &terms.derivative, theta, backend, rng);
}

namespace {

using TermSource = std::function<PauliPair(double beta)>;

RunResult descend(const ModelParams& params, int cutoff, const HlvqeOptions& opts, std::vector<double> theta,
                  const TermSource& source) {
    const int n_q = register_width(cutoff);
    const FullState exact{params.n_particles(), exact_ground_state(params).vector};
    const Rng root(opts.backend.seed);

    RunResult result;
    double beta = opts.init_beta;
    for (int step = 1; step <= opts.max_iterations; ++step) {
        Rng rng = root.split(static_cast<std::uint64_t>(step));
        const PauliPair terms = source(beta);
        const CostAndGrads cg =
            evaluate_terms(terms.value, opts.optimize_beta ? &terms.derivative : nullptr, theta, opts.backend, &rng);

        IterationRecord rec;
        rec.step = step;
        rec.beta = beta;
        rec.theta = theta;
        rec.energy = cg.energy;
        rec.grad_beta = cg.grad_beta;
        rec.grad_theta = cg.grad_theta;
        double sq = cg.grad_beta * cg.grad_beta;
        for (double g : cg.grad_theta) sq += g * g;
        rec.grad_norm = std::sqrt(sq);

        const Vector register_state = prepare_ansatz(theta, n_q).real_part();
        for (Eigen::Index i = 0; i < register_state.size(); ++i) rec.amplitudes.push_back(std::abs(register_state(i)));
        const Vector amps = register_state.head(std::min<Eigen::Index>(cutoff, params.dimension()));
        try {
            const FullState projected =
                project_parity(reconstruct_full({static_cast<int>(amps.size()), beta, amps}, params), Parity::even);
            rec.bures = bures_distance(projected, exact);
        } catch (const NumericalError&) {
            rec.bures = std::numbers::sqrt2;
        }

        const double previous = result.trace.empty() ? 0.0 : result.trace.back().energy;
        result.trace.push_back(rec);

        if (opts.energy_tolerance && step > 1 && std::abs(cg.energy - previous) < *opts.energy_tolerance) {
            result.converged_early = true;
            break;
        }
        double scale = opts.learning_rate;
        if (opts.update == UpdateRule::normalized) {
            if (rec.grad_norm < 1e-14) {
                result.converged_early = true;
                break;
            }
            scale /= rec.grad_norm;
        } else if (opts.update == UpdateRule::clipped) {
            scale /= std::max(rec.grad_norm, 1.0);
        }
        if (opts.optimize_beta) beta -= scale * cg.grad_beta;
        for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= scale * cg.grad_theta[i];
    }
    return result;
}

std::vector<double> initial_theta(const HlvqeOptions& opts, int cutoff) {
    return opts.init_theta.empty() ? std::vector<double>(cutoff - 1, 0.0) : opts.init_theta;
}

}  // namespace

RunResult run(const ModelParams& params, int cutoff, const HlvqeOptions& opts) {
    register_width(cutoff);
    if (cutoff > params.dimension()) throw ConfigError("cutoff exceeds N+1");
    opts.validate(cutoff);
    return descend(params, cutoff, opts, initial_theta(opts, cutoff),
                   [&](double beta) { return hamiltonian_terms(params, beta, cutoff); });
}

std::vector<RunResult> run_ensemble(const ModelParams& params, int cutoff, const HlvqeOptions& opts,
                                    const std::vector<std::uint64_t>& seeds, Execution exec) {
    opts.validate(cutoff);
    std::vector<RunResult> out(seeds.size());
    detail::for_each_index(static_cast<int>(seeds.size()), exec, [&](int i) {
        HlvqeOptions member = opts;
        member.backend.seed = seeds[i];
        out[i] = run(params, cutoff, member);
    });
    return out;
}

RunSummary summarize(const std::vector<IterationRecord>& trace, StepWindow window) {
    std::vector<const IterationRecord*> picked;
    for (const auto& r : trace)
        if (r.step >= window.first && r.step <= window.last) picked.push_back(&r);
    if (picked.empty()) throw ConfigError("summary window contains no iterations");

    const auto spread = [&](const std::function<double(const IterationRecord&)>& get) {
        double sum = 0.0;
        double lo = get(*picked.front());
        double hi = lo;
        for (const auto* r : picked) {
            const double x = get(*r);
            sum += x;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return Spread{sum / picked.size(), 0.5 * (hi - lo)};
    };
    RunSummary s;
    s.energy = spread([](const IterationRecord& r) { return r.energy; });
    s.beta = spread([](const IterationRecord& r) { return r.beta; });
    s.bures = spread([](const IterationRecord& r) { return r.bures; });
    const std::size_t n_amp = picked.front()->amplitudes.size();
    for (std::size_t i = 0; i < n_amp; ++i) s.amplitudes.push_back(spread([i](const IterationRecord& r) { return r.amplitudes.at(i); }));
    return s;
}

PauliDecomposition excited_hamiltonian(const PauliDecomposition& decomposition, const StateVector& ground, double mu0) {
    if (mu0 < 0.0) throw ConfigError("chemical potential mu0 must be non-negative");
    if (ground.n_qubits() != decomposition.n_qubits) throw ConfigError("ground state width does not match the decomposition");
    if (mu0 == 0.0) return decomposition;
    if (ground.max_imag() > 1e-12) throw ConfigError("excited-state construction needs a real ground state");

    const int n = decomposition.n_qubits;
    const double weight = mu0 / double(1u << n);
    PauliDecomposition out = decomposition;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.terms.size(); ++i) index[out.terms[i].ops.str()] = i;

    const std::vector<std::pair<char, Pauli>> letters = {{'I', Pauli::I}, {'X', Pauli::X}, {'Y', Pauli::Y}, {'Z', Pauli::Z}};
    for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
        std::vector<Pauli> ops(n);
        unsigned c = code;
        for (int q = n - 1; q >= 0; --q, c >>= 2) ops[q] = letters[c & 3u].second;
        PauliString s(std::move(ops));
        if (s.y_count() % 2 != 0) continue;
        const double shift = weight * measure_pauli(ground, s, Backend::analytic()).value;
        if (std::abs(shift) < 1e-15) continue;
        auto it = index.find(s.str());
        if (it != index.end()) {
            out.terms[it->second].coefficient += shift;
        } else {
            index[s.str()] = out.terms.size();
            out.terms.push_back({std::move(s), shift});
        }
    }
    return out;
}

ExcitedResult run_excited(const ModelParams& params, int cutoff, double beta, std::span<const double> ground_theta,
                          double mu0, const HlvqeOptions& opts) {
    const int n_q = register_width(cutoff);
    if (static_cast<int>(ground_theta.size()) != cutoff - 1) throw ConfigError("ground theta needs cutoff - 1 entries");
    opts.validate(cutoff);
    if (mu0 <= 0.0) throw ConfigError("excited-state search needs mu0 > 0");

    const StateVector ground = prepare_ansatz(ground_theta, n_q);
    ExcitedResult out;
    out.hamiltonian = excited_hamiltonian(hamiltonian_terms(params, beta, cutoff).value, ground, mu0);
    PauliPair fixed{out.hamiltonian, PauliDecomposition{n_q, {}, beta}};

    HlvqeOptions theta_only = opts;
    theta_only.optimize_beta = false;
    theta_only.init_beta = beta;
    std::vector<double> theta = opts.init_theta;
    if (theta.empty()) {
        theta.assign(ground_theta.begin(), ground_theta.end());
        theta[0] += std::numbers::pi / 2;
    }
    out.run = descend(params, cutoff, theta_only, theta, [&](double) { return fixed; });
    const Vector last = prepare_ansatz(out.run.trace.back().theta, n_q).real_part();
    out.ground_overlap = std::abs(last.dot(ground.real_part()));
    return out;
}

}  // namespace lmg
