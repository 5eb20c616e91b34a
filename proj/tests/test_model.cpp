#include "lmg/model.hpp"
#include "golden.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace lmg;

TEST(ModelParams, VbarAndCouplingAreInterchangeable) {
    const auto a = ModelParams::from_vbar(30, 1.0, 2.0);
    const auto b = ModelParams::from_coupling(30, 1.0, 2.0 / 29.0);
    EXPECT_DOUBLE_EQ(a.coupling(), b.coupling());
    EXPECT_DOUBLE_EQ(b.vbar(), 2.0);
    EXPECT_EQ(a.dimension(), 31);
}

TEST(ModelParams, RejectsInvalidInput) {
    EXPECT_THROW(ModelParams::from_vbar(1, 1.0, 2.0), ConfigError);
    EXPECT_THROW(ModelParams::from_vbar(10, 0.0, 2.0), ConfigError);
    EXPECT_THROW(ModelParams::from_vbar(10, -1.0, 2.0), ConfigError);
    EXPECT_THROW(ModelParams::from_coupling(10, 1.0, std::nan("")), ConfigError);
}

TEST(FullHamiltonian, MatchesLadderOperatorOracle) {
    for (int n : {2, 5, 8, 30}) {
        const auto p = ModelParams::from_vbar(n, 1.3, 1.7);
        EXPECT_LT((full_hamiltonian(p) - oracle::hamiltonian(p)).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
}

TEST(ExactGroundState, NonInteractingLimit) {
    const auto gs = exact_ground_state(ModelParams::from_vbar(2, 1.0, 0.0));
    EXPECT_NEAR(gs.energy, -1.0, 1e-14);
    ASSERT_EQ(gs.vector.size(), 3);
    EXPECT_NEAR(gs.vector(0), 1.0, 1e-14);
    EXPECT_NEAR(gs.vector(1), 0.0, 1e-14);
    EXPECT_NEAR(gs.vector(2), 0.0, 1e-14);
}

TEST(ExactGroundState, ThirtyParticlesVbarTwo) {
    const auto gs = exact_ground_state(ModelParams::from_vbar(30, 1.0, 2.0));
    EXPECT_NEAR(gs.energy, golden::kExactEnergyN30, 1e-6);
    EXPECT_NEAR(gs.vector.norm(), 1.0, 1e-12);
    EXPECT_GE(gs.vector(0), 0.0);
    for (int n = 1; n < gs.vector.size(); n += 2) EXPECT_EQ(gs.vector(n), 0.0);
}

TEST(ExactGroundState, MatchesDenseEigensolve) {
    const auto p = ModelParams::from_vbar(8, 1.0, 1.2);
    const auto gs = exact_ground_state(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(oracle::hamiltonian(p));
    EXPECT_NEAR(gs.energy, solver.eigenvalues()(0), 1e-12);
    Eigen::VectorXd ref = solver.eigenvectors().col(0);
    if (ref(0) < 0) ref = -ref;
    EXPECT_LT((gs.vector - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowestEigenpair, SignConventionAndErrors) {
    Matrix m(2, 2);
    m << 1.0, -2.0, -2.0, 1.0;
    const auto e = lowest_eigenpair(m);
    EXPECT_NEAR(e.energy, -1.0, 1e-14);
    EXPECT_GT(e.vector(0), 0.0);
    EXPECT_THROW(lowest_eigenpair(Matrix(0, 0)), NumericalError);
}

TEST(QuasiSpinElement, ClosedFormExamples) {
    EXPECT_DOUBLE_EQ(quasi_spin_element(30, QuasiSpin::Jz, 0, 0), -15.0);
    EXPECT_NEAR(quasi_spin_element(2, QuasiSpin::Jplus, 1, 0), std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(quasi_spin_element(2, QuasiSpin::Jminus, 0, 1), std::numbers::sqrt2, 1e-15);
    EXPECT_EQ(quasi_spin_element(30, QuasiSpin::Jplus, 5, 5), 0.0);
    EXPECT_EQ(quasi_spin_element(30, QuasiSpin::Jplus2, 4, 3), 0.0);
}

TEST(QuasiSpinElement, AnticommutatorDiagonal) {
    const int two_j = 30;
    const Eigen::MatrixXd jp = oracle::jplus(two_j);
    const Eigen::MatrixXd jm = oracle::jminus(two_j);
    const Eigen::MatrixXd anti = jp * jm + jm * jp;
    for (int k = 0; k <= two_j; ++k) {
        const double m = k - 15.0;
        const double value = quasi_spin_element(two_j, QuasiSpin::JplusJminus, k, k);
        EXPECT_NEAR(value, 2 * 15.0 * 16.0 - 2 * m * m, 1e-10) << k;
        EXPECT_NEAR(value, anti(k, k), 1e-10) << k;
    }
}

TEST(QuasiSpinElement, AllKindsMatchLadderProducts) {
    for (int two_j : {1, 4, 7, 12}) {
        const Eigen::MatrixXd z = oracle::jz(two_j);
        const Eigen::MatrixXd p = oracle::jplus(two_j);
        const Eigen::MatrixXd m = oracle::jminus(two_j);
        const std::pair<QuasiSpin, Eigen::MatrixXd> cases[] = {
            {QuasiSpin::Jz, z},
            {QuasiSpin::Jplus, p},
            {QuasiSpin::Jminus, m},
            {QuasiSpin::Jz2, z * z},
            {QuasiSpin::Jplus2, p * p},
            {QuasiSpin::Jminus2, m * m},
            {QuasiSpin::JzJplus, z * p + p * z},
            {QuasiSpin::JzJminus, z * m + m * z},
            {QuasiSpin::JplusJminus, p * m + m * p},
        };
        for (const auto& [kind, ref] : cases)
            for (int r = 0; r <= two_j; ++r)
                for (int c = 0; c <= two_j; ++c)
                    EXPECT_NEAR(quasi_spin_element(two_j, kind, r, c), ref(r, c), 1e-10)
                        << two_j << " " << static_cast<int>(kind) << " " << r << " " << c;
    }
}

TEST(QuasiSpinElement, RejectsBadLabels) {
    EXPECT_THROW(quasi_spin_element(4, QuasiSpin::Jz, 5, 0), ConfigError);
    EXPECT_THROW(quasi_spin_element(4, QuasiSpin::Jz, -1, 0), ConfigError);
    EXPECT_THROW(parse_quasi_spin("Jq"), ConfigError);
    EXPECT_EQ(parse_quasi_spin("Jz"), QuasiSpin::Jz);
}

TEST(EffectiveHamiltonian, MatchesRotatedOracle) {
    const auto p = ModelParams::from_vbar(12, 1.0, 2.0);
    for (double beta : {0.0, 0.4, 1.1, 2.5}) {
        for (int cutoff : {1, 4, 13}) {
            const Matrix h = effective_hamiltonian(p, beta, cutoff);
            EXPECT_LT((h - oracle::effective(p, beta, cutoff)).cwiseAbs().maxCoeff(), 1e-10) << beta << " " << cutoff;
        }
    }
}

TEST(EffectiveHamiltonian, ExactlySymmetric) {
    const auto p = ModelParams::from_vbar(30, 1.0, 2.0);
    for (double beta : {0.0, 0.3, 1.0162245}) {
        const Matrix h = effective_hamiltonian(p, beta, 31);
        EXPECT_TRUE(h == h.transpose());
        const Matrix d = effective_hamiltonian_derivative(p, beta, 31);
        EXPECT_TRUE(d == d.transpose());
    }
    const Matrix f = full_hamiltonian(p);
    EXPECT_TRUE(f == f.transpose());
}

TEST(EffectiveHamiltonian, ParitySelectionAtZeroAngle) {
    const Matrix h = effective_hamiltonian(ModelParams::from_vbar(20, 1.0, 1.5), 0.0, 21);
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < h.cols(); ++c)
            if ((r - c) % 2 != 0) EXPECT_EQ(h(r, c), 0.0) << r << " " << c;
}

TEST(EffectiveHamiltonian, DerivativeMatchesFiniteDifference) {
    const auto p = ModelParams::from_vbar(16, 1.0, 2.0);
    const int cutoff = 9;
    const double beta = 0.83;
    const double h = 1e-6;
    const Matrix fd = (effective_hamiltonian(p, beta + h, cutoff) - effective_hamiltonian(p, beta - h, cutoff)) / (2 * h);
    EXPECT_LT((effective_hamiltonian_derivative(p, beta, cutoff) - fd).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(EffectiveHamiltonian, GroundEnergyNonIncreasingInCutoff) {
    const auto p = ModelParams::from_vbar(24, 1.0, 2.0);
    for (double beta : {0.0, 0.5, 1.0}) {
        double previous = std::numeric_limits<double>::infinity();
        for (int cutoff = 1; cutoff <= p.dimension(); ++cutoff) {
            const double e = lowest_eigenpair(effective_hamiltonian(p, beta, cutoff)).energy;
            EXPECT_LE(e, previous + 1e-10) << beta << " " << cutoff;
            previous = e;
        }
    }
}

TEST(EffectiveHamiltonian, SingleStateStationaryAtMeanFieldAngle) {
    for (double vbar : {1.2, 2.0, 3.5}) {
        const auto p = ModelParams::from_vbar(30, 1.0, vbar);
        auto energy = [&](double b) { return effective_hamiltonian(p, b, 1)(0, 0); };
        // Golden-section search over [0, pi/2].
        const double ratio = (std::sqrt(5.0) - 1) / 2;
        double lo = 0.0;
        double hi = std::numbers::pi / 2;
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            const double a = hi - ratio * (hi - lo);
            const double b = lo + ratio * (hi - lo);
            if (energy(a) < energy(b)) hi = b; else lo = a;
        }
        const double beta = 0.5 * (lo + hi);
        // Energy comparisons resolve beta only to about sqrt(machine epsilon).
        EXPECT_NEAR(std::cos(beta), 1.0 / vbar, 1e-7) << vbar;
        const double stationary = std::acos(1.0 / vbar);
        EXPECT_NEAR(effective_hamiltonian_derivative(p, stationary, 1)(0, 0), 0.0, 1e-12) << vbar;
    }
}
