#pragma once

#include <random>

#include "qcl/encoding.hpp"
#include "qcl/hamiltonian.hpp"

namespace qcl {

// The layered circuit: U_in(x), then D times (e^{-iHT}, then per-qubit
// R^X R^Z R^X rotations). Parameters are radians, 3*N*D of them.
struct Circuit {
    int num_qubits = 0;
    int depth = 0;
    EncodingSpec encoding;
    EvolutionGate evolution;

    int num_parameters() const { return 3 * num_qubits * depth; }
};

using ParameterVector = Eigen::VectorXd;

// Layout: layer-major, then qubit, then rotation slot (X, Z, X).
// Layers and qubits are 1-based, slot is 0..2.
inline int param_index(const Circuit& c, int layer, int qubit, int slot) {
    if (layer < 1 || layer > c.depth || qubit < 1 || qubit > c.num_qubits || slot < 0 || slot > 2)
        throw std::out_of_range("parameter coordinates out of range");
    return (layer - 1) * 3 * c.num_qubits + (qubit - 1) * 3 + slot;
}

inline Pauli rotation_axis(int slot) { return slot == 1 ? Pauli::Z : Pauli::X; }

// Uniform on [0, 2pi), seeded.
inline ParameterVector random_parameters(const Circuit& c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    ParameterVector theta(c.num_parameters());
    for (Eigen::Index i = 0; i < theta.size(); ++i) theta(i) = uni(rng);
    return theta;
}

struct ObservableSet {
    std::vector<PauliString> observables;

    // Z on qubits 1..count.
    static ObservableSet first_qubits_z(int num_qubits, int count) {
        ObservableSet s;
        for (int q = 1; q <= count; ++q)
            s.observables.push_back(PauliString::single(num_qubits, q, Pauli::Z));
        return s;
    }

    std::size_t size() const { return observables.size(); }
};

inline StateVector output_state(const Circuit& c, const ParameterVector& theta,
                                const Eigen::VectorXd& x) {
    if (theta.size() != c.num_parameters())
        throw std::invalid_argument("parameter vector length does not match circuit");
    StateVector state = encode(c.encoding, x);
    for (int layer = 1; layer <= c.depth; ++layer) {
        state.amplitudes = c.evolution.unitary * state.amplitudes;
        for (int q = 1; q <= c.num_qubits; ++q)
            for (int slot = 0; slot < 3; ++slot)
                detail::rotate_single_in_place(state.amplitudes, c.num_qubits, q,
                                               rotation_axis(slot),
                                               theta(param_index(c, layer, q, slot)));
    }
    return state;
}

inline Eigen::VectorXd forward(const Circuit& c, const ParameterVector& theta,
                               const Eigen::VectorXd& x, const ObservableSet& observables) {
    const StateVector state = output_state(c, theta, x);
    Eigen::VectorXd out(static_cast<Eigen::Index>(observables.size()));
    for (std::size_t j = 0; j < observables.size(); ++j)
        out(static_cast<Eigen::Index>(j)) = expectation(state, observables.observables[j]);
    return out;
}

// Shifting the angle equals inserting an extra +-pi/2 rotation generated by
// the same Pauli, since each parameter enters exactly one exp(-i theta P/2).
inline ParameterVector insert_shifted(const Circuit& c, const ParameterVector& theta,
                                      int flat_index, double shift) {
    if (theta.size() != c.num_parameters())
        throw std::invalid_argument("parameter vector length does not match circuit");
    if (flat_index < 0 || flat_index >= theta.size())
        throw std::out_of_range("parameter index out of range");
    ParameterVector out = theta;
    out(flat_index) += shift;
    return out;
}

}  // namespace qcl
