#pragma once

#include "qcl/ansatz.hpp"

namespace qcl {

using GradientVector = Eigen::VectorXd;

// d<B>/dtheta_j for every observable at once: one row per parameter, one
// column per observable. Two forward passes per parameter.
inline Eigen::MatrixXd param_shift_jacobian(const Circuit& c, const ParameterVector& theta,
                                            const Eigen::VectorXd& x,
                                            const ObservableSet& observables) {
    const int n = c.num_parameters();
    Eigen::MatrixXd jac(n, static_cast<Eigen::Index>(observables.size()));
    ParameterVector shifted = theta;
    for (int j = 0; j < n; ++j) {
        shifted(j) = theta(j) + M_PI / 2.0;
        const Eigen::VectorXd plus = forward(c, shifted, x, observables);
        shifted(j) = theta(j) - M_PI / 2.0;
        const Eigen::VectorXd minus = forward(c, shifted, x, observables);
        shifted(j) = theta(j);
        jac.row(j) = ((plus - minus) / 2.0).transpose();
    }
    return jac;
}

// Exact gradient (<B>+ - <B>-)/2 of a single observable.
inline GradientVector param_shift_grad(const Circuit& c, const ParameterVector& theta,
                                       const Eigen::VectorXd& x, const PauliString& observable) {
    ObservableSet obs;
    obs.observables.push_back(observable);
    return param_shift_jacobian(c, theta, x, obs).col(0);
}

// Central-difference oracle.
inline GradientVector finite_diff_grad(const Circuit& c, const ParameterVector& theta,
                                       const Eigen::VectorXd& x, const PauliString& observable,
                                       double h) {
    if (h <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
    ObservableSet obs;
    obs.observables.push_back(observable);
    const int n = c.num_parameters();
    GradientVector grad(n);
    ParameterVector shifted = theta;
    for (int j = 0; j < n; ++j) {
        shifted(j) = theta(j) + h;
        const double plus = forward(c, shifted, x, obs)(0);
        shifted(j) = theta(j) - h;
        const double minus = forward(c, shifted, x, obs)(0);
        shifted(j) = theta(j);
        grad(j) = (plus - minus) / (2.0 * h);
    }
    return grad;
}

}  // namespace qcl
