#include "lmg/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace lmg {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 20) throw ConfigError("register width must be in [1, 20]");
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) throw ConfigError("qubit index out of range");
}

unsigned StateVector::mask(int qubit) const {
    check_qubit(qubit);
    return 1u << (n_qubits_ - 1 - qubit);
}

void StateVector::apply_ry(int qubit, double theta) {
    const unsigned m = mask(qubit);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | m];
        amps_[i] = c * a0 - s * a1;
        amps_[i | m] = s * a0 + c * a1;
    }
}

void StateVector::apply_s(int qubit) {
    const unsigned m = mask(qubit);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & m) amps_[i] *= Complex{0.0, 1.0};
}

void StateVector::apply_sdg(int qubit) {
    const unsigned m = mask(qubit);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & m) amps_[i] *= Complex{0.0, -1.0};
}

void StateVector::apply_h(int qubit) {
    const unsigned m = mask(qubit);
    const double r = std::numbers::sqrt2 / 2;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | m];
        amps_[i] = r * (a0 + a1);
        amps_[i | m] = r * (a0 - a1);
    }
}

void StateVector::apply_rzx(int z_qubit, int x_qubit, double theta) {
    if (z_qubit == x_qubit) throw ConfigError("RZX needs two distinct qubits");
    const unsigned mz = mask(z_qubit);
    const unsigned mx = mask(x_qubit);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mx) continue;
        const double sign = (i & mz) ? -1.0 : 1.0;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | mx];
        const Complex minus_i_sin{0.0, -sign * s};
        amps_[i] = c * a0 + minus_i_sin * a1;
        amps_[i | mx] = minus_i_sin * a0 + c * a1;
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

double StateVector::max_imag() const {
    double m = 0.0;
    for (const auto& a : amps_) m = std::max(m, std::abs(a.imag()));
    return m;
}

Vector StateVector::real_part() const {
    Vector v(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) v(i) = amps_[i].real();
    return v;
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : n_qubits_(n_qubits), n_params_(0), gates_(std::move(gates)) {
    std::vector<int> uses;
    for (const auto& g : gates_) {
        if (g.q0 < 0 || g.q0 >= n_qubits || (g.kind == GateKind::Rzx && (g.q1 < 0 || g.q1 >= n_qubits)))
            throw ConfigError("gate acts outside the register");
        const bool parameterized = g.kind == GateKind::Ry || g.kind == GateKind::Rzx;
        if (parameterized != (g.param >= 0)) throw ConfigError("only Ry and RZX carry angles");
        if (g.param >= 0) {
            if (g.param >= static_cast<int>(uses.size())) uses.resize(g.param + 1, 0);
            ++uses[g.param];
        }
    }
    for (int u : uses)
        if (u != 1) throw ConfigError("every circuit angle must appear in exactly one gate");
    n_params_ = static_cast<int>(uses.size());
}

StateVector Circuit::run(std::span<const double> theta) const {
    if (static_cast<int>(theta.size()) != n_params_)
        throw ConfigError("circuit expects " + std::to_string(n_params_) + " angles, got " + std::to_string(theta.size()));
    StateVector psi(n_qubits_);
    for (const auto& g : gates_) {
        switch (g.kind) {
            case GateKind::Ry: psi.apply_ry(g.q0, theta[g.param]); break;
            case GateKind::S: psi.apply_s(g.q0); break;
            case GateKind::Sdg: psi.apply_sdg(g.q0); break;
            case GateKind::H: psi.apply_h(g.q0); break;
            case GateKind::Rzx: psi.apply_rzx(g.q0, g.q1, theta[g.param]); break;
        }
    }
    return psi;
}

Circuit ansatz_circuit(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 10) throw ConfigError("ansatz width must be in [1, 10]");
    using enum GateKind;
    if (n_qubits == 1) return Circuit(1, {{Ry, 0, -1, 0}});
    if (n_qubits == 2) return Circuit(2, {{Ry, 0, -1, 0}, {S, 1}, {Rzx, 0, 1, 1}, {Sdg, 1}, {Ry, 1, -1, 2}});

    // Layers of Ry on every qubit followed by an S . RZX . S-dagger chain, which keeps
    // amplitudes real, cut off once 2^n - 1 angles are placed.
    const int total = (1 << n_qubits) - 1;
    std::vector<Gate> gates;
    int next = 0;
    while (next < total) {
        for (int q = 0; q < n_qubits && next < total; ++q) gates.push_back({Ry, q, -1, next++});
        for (int q = 0; q + 1 < n_qubits && next < total; ++q) {
            gates.push_back({S, q + 1});
            gates.push_back({Rzx, q, q + 1, next++});
            gates.push_back({Sdg, q + 1});
        }
    }
    return Circuit(n_qubits, std::move(gates));
}

StateVector prepare_ansatz(std::span<const double> theta, int n_qubits) {
    const std::size_t expected = (std::size_t{1} << n_qubits) - 1;
    if (theta.size() != expected)
        throw ConfigError("ansatz on " + std::to_string(n_qubits) + " qubits needs " + std::to_string(expected) + " angles");
    return ansatz_circuit(n_qubits).run(theta);
}

namespace {

std::seed_seq make_seed(const std::vector<std::uint64_t>& key) {
    std::vector<std::uint32_t> words;
    for (auto k : key) {
        words.push_back(static_cast<std::uint32_t>(k));
        words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    return std::seed_seq(words.begin(), words.end());
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_{seed} {
    auto seq = make_seed(key_);
    engine_.seed(seq);
}

Rng::Rng(std::vector<std::uint64_t> key) : key_(std::move(key)) {
    auto seq = make_seed(key_);
    engine_.seed(seq);
}

Rng Rng::split(std::uint64_t stream) const {
    auto key = key_;
    key.push_back(stream);
    return Rng(std::move(key));
}

Backend Backend::sampled(long shots, std::uint64_t seed) {
    if (shots < 1) throw ConfigError("sampled backend needs shots >= 1");
    return {Kind::sampled, shots, seed};
}

std::vector<long> sample_counts(const StateVector& state, long shots, Rng& rng) {
    if (shots < 1) throw ConfigError("shots must be >= 1");
    const auto probs = state.probabilities();
    std::vector<long> counts(probs.size(), 0);
    long remaining = shots;
    double mass = 1.0;
    for (std::size_t k = 0; k + 1 < probs.size() && remaining > 0; ++k) {
        const double p = mass > 0.0 ? std::clamp(probs[k] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<long> draw(remaining, p);
        counts[k] = draw(rng.engine());
        remaining -= counts[k];
        mass -= probs[k];
    }
    counts.back() += remaining;
    return counts;
}

std::vector<long> sample_counts(const StateVector& state, long shots, std::uint64_t seed) {
    Rng rng(seed);
    return sample_counts(state, shots, rng);
}

StateVector rotate_to_measurement_basis(StateVector state, const PauliString& ops) {
    if (ops.width() != state.n_qubits()) throw ConfigError("Pauli string width does not match the register");
    for (int q = 0; q < ops.width(); ++q) {
        if (ops[q] == Pauli::X) {
            state.apply_h(q);
        } else if (ops[q] == Pauli::Y) {
            state.apply_sdg(q);
            state.apply_h(q);
        }
    }
    return state;
}

ExpectationEstimate measure_pauli(const StateVector& state, const PauliString& ops, const Backend& backend, Rng* rng) {
    if (ops.width() != state.n_qubits()) throw ConfigError("Pauli string width does not match the register");
    const long shots = backend.is_sampled() ? backend.shots : 0;
    if (backend.is_sampled() && shots < 1) throw ConfigError("sampled backend needs shots >= 1");
    if (ops.is_identity()) return {1.0, 0.0, shots};

    if (!backend.is_sampled()) {
        const unsigned flip = ops.flip_mask();
        const unsigned phase = ops.phase_mask();
        Complex global{1.0, 0.0};
        for (int i = 0; i < ops.y_count(); ++i) global *= Complex{0.0, 1.0};
        Complex acc{0.0, 0.0};
        const auto& a = state.amplitudes();
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double sign = (std::popcount(static_cast<unsigned>(k) & phase) & 1) ? -1.0 : 1.0;
            acc += std::conj(a[k ^ flip]) * sign * a[k];
        }
        return {(global * acc).real(), 0.0, 0};
    }

    Rng local(backend.seed);
    Rng& source = rng ? *rng : local;
    const auto counts = sample_counts(rotate_to_measurement_basis(state, ops), shots, source);
    std::vector<double> freq(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) freq[k] = double(counts[k]) / double(shots);
    const double mean = expectation_from_probs(freq, ops);
    const double var = shots > 1 ? std::max(0.0, 1.0 - mean * mean) * double(shots) / double(shots - 1) : 0.0;
    return {mean, std::sqrt(var / double(shots)), shots};
}

double parameter_shift_grad(std::span<const double> theta, int index, const PauliString& ops, const Backend& backend,
                            Rng* rng) {
    if (index < 0 || index >= static_cast<int>(theta.size())) throw ConfigError("parameter index out of range");
    std::vector<double> shifted(theta.begin(), theta.end());
    shifted[index] += std::numbers::pi / 2;
    const double plus = measure_pauli(prepare_ansatz(shifted, ops.width()), ops, backend, rng).value;
    shifted[index] -= std::numbers::pi;
    const double minus = measure_pauli(prepare_ansatz(shifted, ops.width()), ops, backend, rng).value;
    return 0.5 * (plus - minus);
}

}  // namespace lmg
