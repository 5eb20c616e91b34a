#include "lmg/rotations.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace lmg {

namespace {

using quad = __float128;

constexpr int kMaxTwoJ = 160;

const std::vector<quad>& factorials() {
    static const std::vector<quad> table = [] {
        std::vector<quad> f(kMaxTwoJ + 1);
        f[0] = 1;
        for (int i = 1; i <= kMaxTwoJ; ++i) f[i] = f[i - 1] * quad(i);
        return f;
    }();
    return table;
}

// Pascal's triangle, row-major with stride kMaxTwoJ + 1.
const std::vector<quad>& binomials() {
    static const std::vector<quad> table = [] {
        constexpr int n = kMaxTwoJ + 1;
        std::vector<quad> c(n * n, quad(0));
        for (int i = 0; i < n; ++i) {
            c[i * n] = 1;
            for (int k = 1; k <= i; ++k) c[i * n + k] = c[(i - 1) * n + k - 1] + c[(i - 1) * n + k];
        }
        return c;
    }();
    return table;
}

void check_labels(int two_j, int two_m_row, int two_m_col) {
    if (two_j < 0 || two_j > kMaxTwoJ) throw ConfigError("2J outside supported range [0, 160]");
    if (std::abs(two_m_row) > two_j || std::abs(two_m_col) > two_j) throw ConfigError("|M| exceeds J");
    if ((two_j - two_m_row) % 2 != 0 || (two_j - two_m_col) % 2 != 0)
        throw ConfigError("J and M must both be integer or both half-integer");
}

// cos^k(beta/2) and sin^k(beta/2) for k = 0..2J.
struct HalfAnglePowers {
    std::vector<quad> cos_pow;
    std::vector<quad> sin_pow;

    HalfAnglePowers(int two_j, double beta) : cos_pow(two_j + 1), sin_pow(two_j + 1) {
        const quad half = quad(beta) / 2;
        const quad c = cosq(half);
        const quad s = sinq(half);
        cos_pow[0] = sin_pow[0] = 1;
        for (int k = 1; k <= two_j; ++k) {
            cos_pow[k] = cos_pow[k - 1] * c;
            sin_pow[k] = sin_pow[k - 1] * s;
        }
    }
};

// Integer labels: a = J+M', b = J-M', c = J+M, d = J-M.
// d = sqrt(a! b! / (c! d!)) * sum_s C(c, b-s) C(d, s) (-1)^(b-s) cos^(2s+M'+M) sin^(2J-2s-M'-M).
quad small_d_quad(int two_j, int two_m_row, int two_m_col, const HalfAnglePowers& pw) {
    const auto& f = factorials();
    const auto& binom = binomials();
    constexpr int stride = kMaxTwoJ + 1;
    const int a = (two_j + two_m_row) / 2;
    const int b = (two_j - two_m_row) / 2;
    const int c = (two_j + two_m_col) / 2;
    const int d = (two_j - two_m_col) / 2;
    const int shift = (two_m_row + two_m_col) / 2;
    quad sum = 0;
    for (int s = std::max(0, b - c); s <= std::min(d, b); ++s) {
        const int k = b - s;
        const int cos_power = 2 * s + shift;
        const int sin_power = two_j - 2 * s - shift;
        if (cos_power < 0 || sin_power < 0) continue;
        const quad term = binom[c * stride + k] * binom[d * stride + s] * pw.cos_pow[cos_power] * pw.sin_pow[sin_power];
        sum += (k % 2 == 0) ? term : -term;
    }
    return sqrtq(f[a] * f[b] / (f[c] * f[d])) * sum;
}

}  // namespace

double wigner_small_d(int two_j, int two_m_row, int two_m_col, double beta) {
    check_labels(two_j, two_m_row, two_m_col);
    return double(small_d_quad(two_j, two_m_row, two_m_col, HalfAnglePowers(two_j, beta)));
}

Matrix wigner_d_matrix(int two_j, double beta, int columns, Execution exec) {
    check_labels(two_j, two_j, two_j);
    const int dim = two_j + 1;
    if (columns < 0) columns = dim;
    if (columns > dim) throw ConfigError("requested more d-matrix columns than 2J+1");
    const HalfAnglePowers pw(two_j, beta);
    Matrix d(dim, columns);
    const auto fill_row = [&](int row) {
        for (int col = 0; col < columns; ++col)
            d(row, col) = double(small_d_quad(two_j, 2 * row - two_j, 2 * col - two_j, pw));
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int row = 0; row < dim; ++row) fill_row(row);
    } else {
        for (int row = 0; row < dim; ++row) fill_row(row);
    }
    return d;
}

FullState reconstruct_full(const EffectiveState& state, const ModelParams& params) {
    const int dim = params.dimension();
    if (state.cutoff < 1 || state.cutoff > dim || state.amplitudes.size() != state.cutoff)
        throw ConfigError("effective state does not fit the model dimension");
    FullState out{params.n_particles(), Vector::Zero(dim)};
    if (state.beta == 0.0) {
        out.amplitudes.head(state.cutoff) = state.amplitudes;
        return out;
    }
    out.amplitudes = wigner_d_matrix(params.n_particles(), state.beta, state.cutoff) * state.amplitudes;
    return out;
}

FullState project_parity(const FullState& state, Parity sector) {
    FullState out = state;
    const int keep = sector == Parity::even ? 0 : 1;
    for (Eigen::Index m = 0; m < out.amplitudes.size(); ++m)
        if (m % 2 != keep) out.amplitudes(m) = 0.0;
    const double norm = out.amplitudes.norm();
    if (norm == 0.0) throw NumericalError("parity projection has zero norm");
    out.amplitudes /= norm;
    return out;
}

double bures_distance(const FullState& a, const FullState& b) {
    if (a.amplitudes.size() != b.amplitudes.size()) throw ConfigError("Bures distance needs equal dimensions");
    const double overlap = std::min(1.0, std::abs(a.amplitudes.dot(b.amplitudes)));
    return std::sqrt(2.0 * (1.0 - overlap));
}

double full_space_energy(const ModelParams& params, const FullState& state) {
    if (state.amplitudes.size() != params.dimension()) throw ConfigError("state dimension does not match model");
    return state.amplitudes.dot(full_hamiltonian(params) * state.amplitudes);
}

}  // namespace lmg
