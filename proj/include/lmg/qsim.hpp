#pragma once

#include "lmg/pauli.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace lmg {

using Complex = std::complex<double>;

class StateVector {
public:
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

    // Qubit 0 is the most significant bit of the basis index.
    void apply_ry(int qubit, double theta);
    void apply_s(int qubit);
    void apply_sdg(int qubit);
    void apply_h(int qubit);
    // exp(-i theta/2 Z_{z_qubit} X_{x_qubit}).
    void apply_rzx(int z_qubit, int x_qubit, double theta);

    std::vector<double> probabilities() const;
    double norm() const;
    double max_imag() const;
    Vector real_part() const;

private:
    unsigned mask(int qubit) const;
    void check_qubit(int qubit) const;
    int n_qubits_;
    std::vector<Complex> amps_;
};

enum class GateKind { Ry, S, Sdg, H, Rzx };

struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;
    int param = -1;  // index into the angle vector for Ry and Rzx
};

class Circuit {
public:
    Circuit(int n_qubits, std::vector<Gate> gates);
    int n_qubits() const { return n_qubits_; }
    int n_params() const { return n_params_; }
    const std::vector<Gate>& gates() const { return gates_; }
    StateVector run(std::span<const double> theta) const;

private:
    int n_qubits_;
    int n_params_;
    std::vector<Gate> gates_;
};

// Real-amplitude ansatz with 2^n - 1 angles, each used by exactly one gate.
Circuit ansatz_circuit(int n_qubits);

StateVector prepare_ansatz(std::span<const double> theta, int n_qubits);

// Seedable generator; split() derives an independent stream for a given index.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    Rng split(std::uint64_t stream) const;
    std::uint64_t seed() const { return key_.front(); }
    std::mt19937_64& engine() { return engine_; }

private:
    explicit Rng(std::vector<std::uint64_t> key);
    std::vector<std::uint64_t> key_;
    std::mt19937_64 engine_;
};

struct Backend {
    enum class Kind { analytic, sampled };
    Kind kind = Kind::analytic;
    long shots = 0;
    std::uint64_t seed = 0;

    static Backend analytic() { return {}; }
    static Backend sampled(long shots, std::uint64_t seed);
    bool is_sampled() const { return kind == Kind::sampled; }
};

struct ExpectationEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long shots = 0;
};

std::vector<long> sample_counts(const StateVector& state, long shots, Rng& rng);
std::vector<long> sample_counts(const StateVector& state, long shots, std::uint64_t seed);

// Apply H (X positions) or S-dagger then H (Y positions) so the string becomes Z-diagonal.
StateVector rotate_to_measurement_basis(StateVector state, const PauliString& ops);

// Sampled backends draw from `rng` when given, otherwise from a stream seeded by backend.seed.
ExpectationEstimate measure_pauli(const StateVector& state, const PauliString& ops, const Backend& backend,
                                  Rng* rng = nullptr);

// (<P>(theta_i + pi/2) - <P>(theta_i - pi/2)) / 2 on the ansatz circuit.
double parameter_shift_grad(std::span<const double> theta, int index, const PauliString& ops, const Backend& backend,
                            Rng* rng = nullptr);

}  // namespace lmg
