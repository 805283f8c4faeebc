#pragma once

#include <map>
#include <string>

#include "qcl/state.hpp"

namespace qcl {

enum class EncodingKind { ry_only, ry_rz, multi_dim_ry_rz };

inline EncodingKind encoding_kind_from_string(const std::string& s) {
    if (s == "ry_only") return EncodingKind::ry_only;
    if (s == "ry_rz") return EncodingKind::ry_rz;
    if (s == "multi_dim") return EncodingKind::multi_dim_ry_rz;
    throw std::invalid_argument("unknown encoding kind: " + s);
}

inline std::string to_string(EncodingKind k) {
    switch (k) {
    case EncodingKind::ry_only: return "ry_only";
    case EncodingKind::ry_rz: return "ry_rz";
    case EncodingKind::multi_dim_ry_rz: return "multi_dim";
    }
    return "?";
}

struct EncodingSpec {
    EncodingKind kind = EncodingKind::ry_rz;
    int num_qubits = 0;
    int input_dim = 1;  // 1 except for multi_dim_ry_rz
};

// U_in(x)|0...0>. Per qubit q (1-based) with feature value v:
//   ry_only:  R^Y(asin v)
//   ry_rz:    R^Y(asin v) then R^Z(acos v^2)
// multi_dim assigns feature (q-1) mod input_dim to qubit q.
inline StateVector encode(const EncodingSpec& spec, const Eigen::VectorXd& x) {
    if (x.size() != spec.input_dim)
        throw std::invalid_argument("input dimension does not match encoding spec");
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (std::abs(x(i)) > 1.0)
            throw std::domain_error("encoding input outside [-1, 1]");
    StateVector state = zero_state(spec.num_qubits);
    const bool with_rz = spec.kind != EncodingKind::ry_only;
    for (int q = 1; q <= spec.num_qubits; ++q) {
        const double v = x((q - 1) % spec.input_dim);
        detail::rotate_single_in_place(state.amplitudes, spec.num_qubits, q, Pauli::Y,
                                       std::asin(v));
        if (with_rz)
            detail::rotate_single_in_place(state.amplitudes, spec.num_qubits, q, Pauli::Z,
                                           std::acos(v * v));
    }
    return state;
}

inline StateVector encode(const EncodingSpec& spec, double x) {
    Eigen::VectorXd v(1);
    v(0) = x;
    return encode(spec, v);
}

// Expansion coefficients a_k of rho = |psi><psi| = sum_k a_k P_k, with
// a_k = <P_k>/2^N. Oracle scale: 4^N terms.
inline std::map<std::string, double> pauli_coefficients(const StateVector& state) {
    if (state.num_qubits > 4)
        throw std::invalid_argument("pauli_coefficients limited to N <= 4");
    std::map<std::string, double> out;
    const double scale = 1.0 / static_cast<double>(1ull << state.num_qubits);
    for (const PauliString& p : all_pauli_strings(state.num_qubits))
        out[p.str()] = expectation(state, p) * scale;
    return out;
}

}  // namespace qcl
