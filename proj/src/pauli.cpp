#include "lmg/pauli.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace lmg {

namespace {

unsigned bit_of(int position, int width) { return 1u << (width - 1 - position); }

int parity_sign(unsigned x) { return (std::popcount(x) & 1) ? -1 : 1; }

int qubits_for(Eigen::Index dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0) throw ConfigError("dimension " + std::to_string(dim) + " is not a power of two");
    return std::countr_zero(static_cast<unsigned>(dim));
}

PauliString from_index(unsigned code, int width) {
    static constexpr Pauli letters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    std::vector<Pauli> ops(width);
    for (int q = width - 1; q >= 0; --q) {
        ops[q] = letters[code & 3u];
        code >>= 2;
    }
    return PauliString(std::move(ops));
}

}  // namespace

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> ops;
    for (char ch : text) {
        switch (ch) {
            case 'I': ops.push_back(Pauli::I); break;
            case 'X': ops.push_back(Pauli::X); break;
            case 'Y': ops.push_back(Pauli::Y); break;
            case 'Z': ops.push_back(Pauli::Z); break;
            default: throw ConfigError("invalid Pauli letter '" + std::string(1, ch) + "'");
        }
    }
    return PauliString(std::move(ops));
}

bool PauliString::is_identity() const {
    for (Pauli p : ops_)
        if (p != Pauli::I) return false;
    return true;
}

std::string PauliString::str() const {
    std::string s;
    for (Pauli p : ops_) s.push_back(static_cast<char>(p));
    return s;
}

unsigned PauliString::flip_mask() const {
    unsigned m = 0;
    for (int q = 0; q < width(); ++q)
        if (ops_[q] == Pauli::X || ops_[q] == Pauli::Y) m |= bit_of(q, width());
    return m;
}

unsigned PauliString::phase_mask() const {
    unsigned m = 0;
    for (int q = 0; q < width(); ++q)
        if (ops_[q] == Pauli::Y || ops_[q] == Pauli::Z) m |= bit_of(q, width());
    return m;
}

int PauliString::y_count() const {
    int n = 0;
    for (Pauli p : ops_) n += p == Pauli::Y;
    return n;
}

double PauliDecomposition::coefficient(std::string_view ops) const {
    for (const auto& t : terms)
        if (t.ops.str() == ops) return t.coefficient;
    return 0.0;
}

Matrix pauli_matrix(const PauliString& ops) {
    if (ops.y_count() % 2 != 0) throw ConfigError("string " + ops.str() + " has an imaginary matrix");
    const unsigned dim = 1u << ops.width();
    const unsigned flip = ops.flip_mask();
    const unsigned phase = ops.phase_mask();
    const int global = (ops.y_count() / 2) % 2 ? -1 : 1;
    Matrix m = Matrix::Zero(dim, dim);
    for (unsigned k = 0; k < dim; ++k) m(k ^ flip, k) = global * parity_sign(k & phase);
    return m;
}

PauliDecomposition decompose(const Matrix& matrix, double beta, double prune) {
    if (matrix.rows() != matrix.cols()) throw ConfigError("Pauli decomposition needs a square matrix");
    const int n = qubits_for(matrix.rows());
    const unsigned dim = 1u << n;
    PauliDecomposition out{n, {}, beta};
    for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
        PauliString ops = from_index(code, n);
        if (ops.y_count() % 2 != 0) continue;
        const unsigned flip = ops.flip_mask();
        const unsigned phase = ops.phase_mask();
        double trace = 0.0;
        for (unsigned k = 0; k < dim; ++k) trace += parity_sign(k & phase) * matrix(k, k ^ flip);
        const double c = ((ops.y_count() / 2) % 2 ? -trace : trace) / dim;
        if (std::abs(c) > prune) out.terms.push_back({std::move(ops), c});
    }
    return out;
}

Matrix reassemble(const PauliDecomposition& decomposition) {
    const unsigned dim = 1u << decomposition.n_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& t : decomposition.terms) {
        if (t.ops.width() != decomposition.n_qubits) throw ConfigError("term width does not match register");
        m += t.coefficient * pauli_matrix(t.ops);
    }
    return m;
}

namespace {

PauliDecomposition named(int n_qubits, double beta, std::initializer_list<std::pair<const char*, double>> items) {
    PauliDecomposition d{n_qubits, {}, beta};
    for (const auto& [ops, c] : items) d.terms.push_back({PauliString::parse(ops), c});
    return d;
}

}  // namespace

PauliPair coeffs_1q(const ModelParams& params, double beta) {
    const double n = params.n_particles();
    const double eps = params.epsilon();
    const double v = params.coupling();
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const double rn = std::sqrt(n);
    PauliPair out;
    out.value = named(1, beta, {
        {"I", -0.25 * (n - 1) * ((n - 3) * v * s * s + 2 * eps * c)},
        {"X", 0.5 * rn * (eps - (n - 1) * v * c) * s},
        {"Z", -0.25 * (3 * (n - 1) * v * s * s + 2 * eps * c)},
    });
    out.derivative = named(1, beta, {
        {"I", 0.5 * (n - 1) * (eps - (n - 3) * v * c) * s},
        {"X", 0.5 * rn * (eps * c - (n - 1) * v * std::cos(2 * beta))},
        {"Z", 0.5 * (eps - 3 * (n - 1) * v * c) * s},
    });
    return out;
}

PauliPair coeffs_2q(const ModelParams& params, double beta) {
    if (params.n_particles() < 3) throw ConfigError("two-qubit coefficients need N >= 3");
    const double n = params.n_particles();
    const double eps = params.epsilon();
    // Closed forms below are in terms of v = -V.
    const double v = -params.coupling();
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const double c2 = std::cos(2 * beta);
    const double s2 = std::sin(2 * beta);
    const double r2 = std::numbers::sqrt2;
    const double r3 = std::numbers::sqrt3;
    const double rn = std::sqrt(n);
    const double rn1 = std::sqrt(n - 1);
    const double rn2 = std::sqrt(n - 2);
    const double lo = rn - r3 * rn2;
    const double hi = rn + r3 * rn2;
    const double cubic_lo = n * rn - r3 * rn2 * n - rn + 5 * r3 * rn2;
    const double cubic_hi = n * rn + r3 * rn2 * n - rn - 5 * r3 * rn2;
    const double xx = rn1 * s * (eps + (n - 3) * v * c) / (2 * r2);
    const double dxx = rn1 * (eps * c + (n - 3) * v * c2) / (2 * r2);
    PauliPair out;
    out.value = named(2, beta, {
        {"II", 0.25 * (n - 3) * ((n - 7) * v * s * s - 2 * eps * c)},
        {"XX", xx},
        {"YY", xx},
        {"XZ", lo * rn1 * v * (c2 + 3) / (8 * r2)},
        {"XI", hi * rn1 * v * (c2 + 3) / (8 * r2)},
        {"ZX", 0.25 * s * (eps * lo + cubic_lo * v * c)},
        {"ZZ", 1.5 * v * s * s},
        {"ZI", 1.5 * (n - 3) * v * s * s - eps * c},
        {"IX", 0.25 * s * (eps * hi + cubic_hi * v * c)},
        {"IZ", 0.25 * (3 * (n - 3) * v * s * s - 2 * eps * c)},
    });
    out.derivative = named(2, beta, {
        {"II", 0.25 * (n - 3) * ((n - 7) * v * s2 + 2 * eps * s)},
        {"XX", dxx},
        {"YY", dxx},
        {"XZ", -lo * rn1 * v * s2 / (4 * r2)},
        {"XI", -hi * rn1 * v * s2 / (4 * r2)},
        {"ZX", 0.25 * (eps * lo * c + cubic_lo * v * c2)},
        {"ZZ", 1.5 * v * s2},
        {"ZI", 1.5 * (n - 3) * v * s2 + eps * s},
        {"IX", 0.25 * (eps * hi * c + cubic_hi * v * c2)},
        {"IZ", 0.25 * (3 * (n - 3) * v * s2 + 2 * eps * s)},
    });
    return out;
}

PauliPair hamiltonian_terms(const ModelParams& params, double beta, int cutoff) {
    if (cutoff < 2 || (cutoff & (cutoff - 1)) != 0) throw ConfigError("qubit mapping needs a power-of-two cutoff >= 2");
    if (cutoff > params.dimension()) throw ConfigError("cutoff exceeds N+1");
    if (cutoff == 2) return coeffs_1q(params, beta);
    if (cutoff == 4) return coeffs_2q(params, beta);
    return {decompose(effective_hamiltonian(params, beta, cutoff), beta),
            decompose(effective_hamiltonian_derivative(params, beta, cutoff), beta)};
}

double expectation_from_probs(std::span<const double> probs, const PauliString& ops) {
    const std::size_t dim = std::size_t{1} << ops.width();
    if (probs.size() != dim) throw ConfigError("probability vector does not match string width");
    double total = 0.0;
    for (double p : probs) total += p;
    if (std::abs(total - 1.0) > 1e-9) throw NumericalError("probabilities do not sum to one");
    const unsigned mask = ops.flip_mask() | ops.phase_mask();
    double e = 0.0;
    for (std::size_t k = 0; k < dim; ++k) e += parity_sign(static_cast<unsigned>(k) & mask) * probs[k];
    return e;
}

}  // namespace lmg
