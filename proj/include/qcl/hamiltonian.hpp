#pragma once

#include <random>

#include <Eigen/Eigenvalues>

#include "qcl/state.hpp"

namespace qcl {

// Fully connected transverse-field Ising model
//   H = sum_j a_j X_j + sum_{j>k} J_jk Z_j Z_k
// with couplings stored lower-triangular (row j, col k, j > k; 1-based qubits).
struct IsingHamiltonian {
    int num_qubits = 0;
    Eigen::VectorXd field;      // a_j, size N
    Eigen::MatrixXd coupling;   // J_jk in strictly lower triangle, size NxN
};

// Draw order is fixed: a_1..a_N, then J_jk for j = 2..N, k = 1..j-1.
inline IsingHamiltonian sample_coefficients(int num_qubits, std::uint64_t rng_seed) {
    check_qubit_count(num_qubits);
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    IsingHamiltonian h;
    h.num_qubits = num_qubits;
    h.field = Eigen::VectorXd::Zero(num_qubits);
    h.coupling = Eigen::MatrixXd::Zero(num_qubits, num_qubits);
    for (int j = 0; j < num_qubits; ++j) h.field(j) = uni(rng);
    for (int j = 1; j < num_qubits; ++j)
        for (int k = 0; k < j; ++k) h.coupling(j, k) = uni(rng);
    return h;
}

// Dense 2^N x 2^N matrix assembled directly from bit patterns: ZZ terms are
// diagonal, each X_j couples index pairs differing in one bit.
inline Matrix to_dense(const IsingHamiltonian& h) {
    const int n = h.num_qubits;
    check_qubit_count(n);
    const std::uint64_t dim = 1ull << n;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int j = 2; j <= n; ++j) {
            const double zj = ((i >> (n - j)) & 1ull) ? -1.0 : 1.0;
            for (int k = 1; k < j; ++k) {
                const double zk = ((i >> (n - k)) & 1ull) ? -1.0 : 1.0;
                diag += h.coupling(j - 1, k - 1) * zj * zk;
            }
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
        for (int j = 1; j <= n; ++j) {
            const std::uint64_t flipped = i ^ (1ull << (n - j));
            m(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(i)) += h.field(j - 1);
        }
    }
    return m;
}

// Spectral factorization H = V diag(eigs) V+, reusable for many times t.
struct HamiltonianSpectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;

    Matrix unitary_at(double time) const {
        const Eigen::Index d = eigenvalues.size();
        Vector phases(d);
        for (Eigen::Index k = 0; k < d; ++k)
            phases(k) = std::exp(Complex(0.0, -eigenvalues(k) * time));
        return eigenvectors * phases.asDiagonal() * eigenvectors.adjoint();
    }

    // exp(-iHt)|0...0>, cheaper than forming the full unitary.
    Vector evolve_zero_state(double time) const {
        const Eigen::Index d = eigenvalues.size();
        Vector coeff = eigenvectors.row(0).conjugate();
        for (Eigen::Index k = 0; k < d; ++k)
            coeff(k) *= std::exp(Complex(0.0, -eigenvalues(k) * time));
        return eigenvectors * coeff;
    }
};

inline HamiltonianSpectrum diagonalize(const IsingHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(to_dense(h));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigendecomposition failed");
    return HamiltonianSpectrum{solver.eigenvalues(), solver.eigenvectors()};
}

struct EvolutionGate {
    double time = 0.0;
    Matrix unitary;
};

// exp(-iHt) via eigendecomposition.
inline EvolutionGate evolution_gate(const IsingHamiltonian& h, double time) {
    return EvolutionGate{time, diagonalize(h).unitary_at(time)};
}

}  // namespace qcl
