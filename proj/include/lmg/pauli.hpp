#pragma once

#include "lmg/model.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lmg {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// Tensor product of single-qubit Paulis. Position 0 acts on the most significant
// bit of the basis index, so "XI" flips between |0x> and |1x>.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {}
    static PauliString parse(std::string_view text);
    static PauliString identity(int n_qubits) { return PauliString(std::vector<Pauli>(n_qubits, Pauli::I)); }

    int width() const { return static_cast<int>(ops_.size()); }
    Pauli operator[](int qubit) const { return ops_[qubit]; }
    const std::vector<Pauli>& ops() const { return ops_; }
    bool is_identity() const;
    std::string str() const;

    // Bit masks over basis indices: positions carrying X or Y, and Y or Z.
    unsigned flip_mask() const;
    unsigned phase_mask() const;
    int y_count() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    std::vector<Pauli> ops_;
};

struct PauliTerm {
    PauliString ops;
    double coefficient = 0.0;
};

struct PauliDecomposition {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;
    double beta = 0.0;

    // Coefficient of the named string, zero if absent.
    double coefficient(std::string_view ops) const;
};

// Trace decomposition of a real symmetric 2^n x 2^n matrix; |coefficients| below `prune` are dropped.
PauliDecomposition decompose(const Matrix& matrix, double beta = 0.0, double prune = 1e-14);

Matrix reassemble(const PauliDecomposition& decomposition);

// Real matrix of a Pauli string with an even number of Y factors.
Matrix pauli_matrix(const PauliString& ops);

// Closed-form coefficients of H(beta) and their beta-derivatives, with a fixed term order.
struct PauliPair {
    PauliDecomposition value;
    PauliDecomposition derivative;
};

// Terms I, X, Z.
PauliPair coeffs_1q(const ModelParams& params, double beta);

// Terms II, XX, YY, XZ, XI, ZX, ZZ, ZI, IX, IZ.
PauliPair coeffs_2q(const ModelParams& params, double beta);

// Closed forms for cutoff 2 and 4; trace decomposition of the App-style matrix elements otherwise.
PauliPair hamiltonian_terms(const ModelParams& params, double beta, int cutoff);

// Contract computational-basis probabilities, already rotated into the string's
// measurement basis, with the +-1 parity of its non-identity positions.
double expectation_from_probs(std::span<const double> probs, const PauliString& ops);

}  // namespace lmg
