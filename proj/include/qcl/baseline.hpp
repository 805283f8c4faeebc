#pragma once

#include <functional>

#include "qcl/learn.hpp"

namespace qcl {

struct BasisFunction {
    std::string name;
    std::function<double(double)> fn;
};

using BasisSet = std::vector<BasisFunction>;

// The nine functions a 3-qubit R^Y(asin x) encoding makes available:
// {x, x^2, x^3, sqrt(1-x^2), 1-x^2, (1-x^2)^{3/2}, x sqrt(1-x^2),
//  x^2 sqrt(1-x^2), x(1-x^2)}.
inline BasisSet three_qubit_basis() {
    auto s = [](double x) { return std::sqrt(1.0 - x * x); };
    return {
        {"x", [](double x) { return x; }},
        {"x^2", [](double x) { return x * x; }},
        {"x^3", [](double x) { return x * x * x; }},
        {"sqrt(1-x^2)", s},
        {"1-x^2", [](double x) { return 1.0 - x * x; }},
        {"(1-x^2)^1.5", [s](double x) { return (1.0 - x * x) * s(x); }},
        {"x*sqrt(1-x^2)", [s](double x) { return x * s(x); }},
        {"x^2*sqrt(1-x^2)", [s](double x) { return x * x * s(x); }},
        {"x*(1-x^2)", [](double x) { return x * (1.0 - x * x); }},
    };
}

struct LinearModel {
    Eigen::VectorXd weights;
    bool rank_deficient = false;

    double predict(const BasisSet& basis, double x) const {
        double y = 0.0;
        for (std::size_t k = 0; k < basis.size(); ++k)
            y += weights(static_cast<Eigen::Index>(k)) * basis[k].fn(x);
        return y;
    }
};

inline Eigen::MatrixXd design_matrix(const BasisSet& basis,
                                     const std::vector<Eigen::VectorXd>& inputs) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(inputs.size()),
                      static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                basis[k].fn(inputs[i](0));
    return m;
}

// Unregularized least squares; minimum-norm solution when rank deficient.
inline LinearModel least_squares_fit(const BasisSet& basis, const Dataset& data) {
    if (data.inputs.empty()) throw std::invalid_argument("least_squares_fit: empty dataset");
    const Eigen::MatrixXd phi = design_matrix(basis, data.inputs);
    Eigen::VectorXd y(phi.rows());
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = data.teachers[static_cast<std::size_t>(i)](0);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(phi);
    LinearModel model;
    model.weights = cod.solve(y);
    model.rank_deficient = cod.rank() < std::min(phi.rows(), phi.cols());
    if (model.rank_deficient)
        std::cerr << "least_squares_fit: rank-deficient design, minimum-norm solution\n";
    return model;
}

inline double weight_norm(const LinearModel& model) { return model.weights.norm(); }

// Pauli-transfer matrix R_{mk} = Tr(P_m U P_k U+)/2^N; real orthogonal for
// unitary U. Oracle scale (N <= 3).
inline Eigen::MatrixXd pauli_transfer_matrix(const Matrix& u, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 3)
        throw std::invalid_argument("pauli_transfer_matrix limited to N <= 3");
    if (u.rows() != (1ll << num_qubits) || u.cols() != u.rows())
        throw std::invalid_argument("unitary dimension does not match qubit count");
    if (unitarity_defect(u) > 1e-8) throw std::invalid_argument("matrix is not unitary");
    const auto paulis = all_pauli_strings(num_qubits);
    const double scale = 1.0 / static_cast<double>(1ll << num_qubits);
    std::vector<Matrix> conjugated;  // U P_k U+
    conjugated.reserve(paulis.size());
    for (const auto& p : paulis) conjugated.push_back(u * p.to_dense() * u.adjoint());
    Eigen::MatrixXd r(static_cast<Eigen::Index>(paulis.size()),
                      static_cast<Eigen::Index>(paulis.size()));
    for (std::size_t m = 0; m < paulis.size(); ++m) {
        const Matrix pm = paulis[m].to_dense();
        for (std::size_t k = 0; k < paulis.size(); ++k)
            r(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                (pm * conjugated[k]).trace().real() * scale;
    }
    return r;
}

}  // namespace qcl
