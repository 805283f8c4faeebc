#pragma once

#include <cmath>
#include <stdexcept>

#include "qcl/pauli.hpp"

namespace qcl {

constexpr int kMaxQubits = 12;

// Pure N-qubit state as a dense vector of 2^N amplitudes, unit norm.
// Qubit 1 is the most significant bit of the basis index.
struct StateVector {
    int num_qubits = 0;
    Vector amplitudes;

    std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
};

inline void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be in [1, 12]");
}

inline StateVector zero_state(int num_qubits) {
    check_qubit_count(num_qubits);
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes = Vector::Zero(1ll << num_qubits);
    s.amplitudes(0) = 1.0;
    return s;
}

// P|psi> without forming the dense matrix.
inline Vector apply_pauli_string(const PauliString& p, const Vector& amps) {
    const std::uint64_t mask = p.flip_mask();
    Vector out(amps.size());
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i)
        out(static_cast<Eigen::Index>(i ^ mask)) = p.phase(i) * amps(static_cast<Eigen::Index>(i));
    return out;
}

namespace detail {

inline void require_matching(const StateVector& s, const PauliString& p) {
    if (p.num_qubits() != s.num_qubits)
        throw std::invalid_argument("Pauli string length does not match state qubit count");
}

// In-place exp(-i*angle*P/2) = cos(angle/2) I - i sin(angle/2) P.
inline void rotate_in_place(Vector& amps, const PauliString& p, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const Complex minus_i_s(0.0, -s);
    const std::uint64_t mask = p.flip_mask();
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    if (mask == 0) {
        // Diagonal generator: per-amplitude phase, no pairing needed.
        for (std::uint64_t i = 0; i < dim; ++i)
            amps(static_cast<Eigen::Index>(i)) *= c + minus_i_s * p.phase(i);
        return;
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
        const std::uint64_t j = i ^ mask;
        if (j < i) continue;
        const Complex ai = amps(static_cast<Eigen::Index>(i));
        const Complex aj = amps(static_cast<Eigen::Index>(j));
        // P maps |i> -> phase(i)|j> and |j> -> phase(j)|i>.
        amps(static_cast<Eigen::Index>(i)) = c * ai + minus_i_s * p.phase(j) * aj;
        amps(static_cast<Eigen::Index>(j)) = c * aj + minus_i_s * p.phase(i) * ai;
    }
}

// Specialized weight-1 rotation; avoids the generic per-index phase walk.
inline void rotate_single_in_place(Vector& amps, int num_qubits, int qubit, Pauli axis,
                                   double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::uint64_t mask = 1ull << (num_qubits - qubit);
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    Complex* a = amps.data();
    switch (axis) {
    case Pauli::I:
        return;
    case Pauli::Z: {
        const Complex p0(c, -s), p1(c, s);
        for (std::uint64_t i = 0; i < dim; ++i) a[i] *= (i & mask) ? p1 : p0;
        return;
    }
    case Pauli::X: {
        const Complex ms(0.0, -s);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (i & mask) continue;
            const Complex a0 = a[i], a1 = a[i | mask];
            a[i] = c * a0 + ms * a1;
            a[i | mask] = c * a1 + ms * a0;
        }
        return;
    }
    case Pauli::Y: {
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (i & mask) continue;
            const Complex a0 = a[i], a1 = a[i | mask];
            a[i] = c * a0 - s * a1;
            a[i | mask] = c * a1 + s * a0;
        }
        return;
    }
    }
}

}  // namespace detail

inline StateVector apply_pauli_rotation(const StateVector& state, const PauliString& generator,
                                        double angle) {
    detail::require_matching(state, generator);
    StateVector out = state;
    detail::rotate_in_place(out.amplitudes, generator, angle);
    return out;
}

inline StateVector apply_dense_unitary(const StateVector& state, const Matrix& u) {
    if (u.rows() != u.cols() || u.rows() != state.amplitudes.size())
        throw std::invalid_argument("unitary dimension does not match state");
    StateVector out;
    out.num_qubits = state.num_qubits;
    out.amplitudes = u * state.amplitudes;
    return out;
}

// <psi|B|psi>, real by Hermiticity of B.
inline double expectation(const StateVector& state, const PauliString& observable) {
    detail::require_matching(state, observable);
    return state.amplitudes.dot(apply_pauli_string(observable, state.amplitudes)).real();
}

// Max deviation of U+U from the identity.
inline double unitarity_defect(const Matrix& u) {
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

}  // namespace qcl
