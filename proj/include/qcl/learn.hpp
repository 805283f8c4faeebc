#pragma once

#include <iostream>

#include "qcl/grad.hpp"
#include "qcl/optimize.hpp"

namespace qcl {

struct Dataset {
    std::vector<Eigen::VectorXd> inputs;
    std::vector<Eigen::VectorXd> teachers;
    std::vector<Eigen::VectorXd> test_inputs;
    std::vector<Eigen::VectorXd> test_teachers;

    std::size_t size() const { return inputs.size(); }

    void check_consistent(int input_dim, int output_dim) const {
        if (inputs.size() != teachers.size() || test_inputs.size() != test_teachers.size())
            throw std::invalid_argument("dataset inputs/teachers length mismatch");
        auto check = [&](const std::vector<Eigen::VectorXd>& xs,
                         const std::vector<Eigen::VectorXd>& fs) {
            for (const auto& x : xs)
                if (x.size() != input_dim)
                    throw std::invalid_argument("dataset input dimension mismatch");
            for (const auto& f : fs)
                if (f.size() != output_dim)
                    throw std::invalid_argument("dataset teacher dimension mismatch");
        };
        check(inputs, teachers);
        check(test_inputs, test_teachers);
    }
};

enum class OutputKind { scaled_identity, softmax };
enum class CostKind { quadratic, cross_entropy };

struct OutputMap {
    OutputKind kind = OutputKind::scaled_identity;
    double scale_a = 1.0;
    bool train_scale = false;
};

// L = sum_i ||f_i - y_i||^2
inline double quadratic_cost(const std::vector<Eigen::VectorXd>& outputs,
                             const std::vector<Eigen::VectorXd>& teachers) {
    if (outputs.size() != teachers.size())
        throw std::invalid_argument("quadratic_cost: length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (outputs[i].size() != teachers[i].size())
            throw std::invalid_argument("quadratic_cost: dimension mismatch");
        total += (outputs[i] - teachers[i]).squaredNorm();
    }
    return total;
}

// Max-subtracted for stability; invariant under a constant shift of q.
inline Eigen::VectorXd softmax(const Eigen::VectorXd& q) {
    const double m = q.maxCoeff();
    Eigen::VectorXd e = (q.array() - m).exp();
    return e / e.sum();
}

// L = -sum_i sum_k f_k log y_ik, teachers one-hot, outputs normalized.
inline double cross_entropy(const std::vector<Eigen::VectorXd>& outputs,
                            const std::vector<Eigen::VectorXd>& teachers) {
    if (outputs.size() != teachers.size())
        throw std::invalid_argument("cross_entropy: length mismatch");
    constexpr double eps = 1e-12;
    double total = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        for (Eigen::Index k = 0; k < teachers[i].size(); ++k) {
            if (teachers[i](k) == 0.0) continue;
            double p = outputs[i](k);
            if (p < eps) {
                std::cerr << "cross_entropy: clamping zero probability at true class\n";
                p = eps;
            }
            total -= teachers[i](k) * std::log(p);
        }
    }
    return total;
}

// Sampling-noise emulation: z + N(0, sigma) with
// sigma = sqrt(2/N_s) (1 - z^2) / 4, clipped back to [-1, 1].
struct NoiseModel {
    bool enabled = false;
    int shots = 1;
    std::uint64_t rng_seed = 0;
};

class NoiseSource {
  public:
    explicit NoiseSource(const NoiseModel& model) : model_(model), rng_(model.rng_seed) {
        if (model.enabled && model.shots < 1)
            throw std::invalid_argument("noise model requires shots >= 1");
    }

    double apply(double z) {
        if (!model_.enabled) return z;
        if (std::abs(z) > 1.0) throw std::domain_error("expectation outside [-1, 1]");
        const double sigma = std::sqrt(2.0 / model_.shots) * (1.0 - z * z) / 4.0;
        if (sigma == 0.0) return z;
        std::normal_distribution<double> gauss(0.0, sigma);
        return std::clamp(z + gauss(rng_), -1.0, 1.0);
    }

  private:
    NoiseModel model_;
    std::mt19937_64 rng_;
};

inline double add_sampling_noise(double z, const NoiseModel& model) {
    NoiseSource src(model);
    return src.apply(z);
}

struct TrainOptions {
    MinimizeOptions minimize;
    NoiseModel noise;
};

struct TrainResult {
    ParameterVector theta;
    double scale_a = 1.0;
    std::vector<TrainRecord> trace;
    double train_cost = 0.0;
    double test_cost = 0.0;
    double train_mse = 0.0;  // cost / sample count
    double test_mse = 0.0;
    double train_accuracy = -1.0;  // classification only, else -1
    double test_accuracy = -1.0;
};

namespace detail {

inline Eigen::VectorXd model_output(const Eigen::VectorXd& z, const OutputMap& map, double a) {
    switch (map.kind) {
    case OutputKind::scaled_identity: return a * z;
    case OutputKind::softmax: return softmax(z);
    }
    return z;
}

}  // namespace detail

inline std::vector<Eigen::VectorXd> predict(const Circuit& c, const ParameterVector& theta,
                                            double a, const OutputMap& map,
                                            const ObservableSet& observables,
                                            const std::vector<Eigen::VectorXd>& inputs) {
    std::vector<Eigen::VectorXd> out;
    out.reserve(inputs.size());
    for (const auto& x : inputs)
        out.push_back(detail::model_output(forward(c, theta, x, observables), map, a));
    return out;
}

inline double accuracy(const std::vector<Eigen::VectorXd>& outputs,
                       const std::vector<Eigen::VectorXd>& teachers) {
    if (outputs.empty()) return -1.0;
    int correct = 0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        Eigen::Index po, pt;
        outputs[i].maxCoeff(&po);
        teachers[i].maxCoeff(&pt);
        if (po == pt) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(outputs.size());
}

// Full training loop: parameter-shift gradients chained through the output
// map and cost, minimized over theta (and the scale a when trainable).
inline TrainResult train(const Circuit& circuit, const Dataset& dataset, const OutputMap& map,
                         CostKind cost, const ObservableSet& observables,
                         std::uint64_t theta_seed, const TrainOptions& options = {}) {
    const int num_obs = static_cast<int>(observables.size());
    dataset.check_consistent(circuit.encoding.input_dim, num_obs);
    if (map.kind == OutputKind::softmax && cost != CostKind::cross_entropy)
        throw std::invalid_argument("softmax output requires cross-entropy cost");
    for (const auto& x : dataset.inputs)
        for (const auto& xt : dataset.test_inputs)
            if (x.size() == xt.size() && x == xt)
                throw std::logic_error("train/test sets overlap");

    const int n_theta = circuit.num_parameters();
    const bool with_scale = map.kind == OutputKind::scaled_identity && map.train_scale;
    const int n_total = n_theta + (with_scale ? 1 : 0);

    NoiseSource noise(options.noise);

    // Objective over packed vector [theta; a?].
    Objective objective = [&](const Eigen::VectorXd& packed, Eigen::VectorXd& grad) -> double {
        const ParameterVector theta = packed.head(n_theta);
        const double a = with_scale ? packed(n_theta) : map.scale_a;
        grad.setZero(n_total);
        double total = 0.0;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            Eigen::VectorXd z = forward(circuit, theta, dataset.inputs[i], observables);
            for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = noise.apply(z(k));
            const Eigen::MatrixXd jac =
                param_shift_jacobian(circuit, theta, dataset.inputs[i], observables);
            const Eigen::VectorXd& f = dataset.teachers[i];
            if (cost == CostKind::quadratic) {
                const Eigen::VectorXd r = a * z - f;
                total += r.squaredNorm();
                grad.head(n_theta) += 2.0 * a * (jac * r);
                if (with_scale) grad(n_theta) += 2.0 * r.dot(z);
            } else {
                const Eigen::VectorXd y = softmax(z);
                for (Eigen::Index k = 0; k < f.size(); ++k)
                    if (f(k) != 0.0) total -= f(k) * std::log(std::max(y(k), 1e-12));
                grad.head(n_theta) += jac * (y - f);
            }
        }
        return total;
    };

    Eigen::VectorXd packed0(n_total);
    packed0.head(n_theta) = random_parameters(circuit, theta_seed);
    if (with_scale) packed0(n_theta) = map.scale_a;

    MinimizeOptions min_opts = options.minimize;
    if (options.noise.enabled) min_opts.check_gradient = false;  // objective is stochastic
    const MinimizeResult opt = minimize(objective, packed0, min_opts);

    TrainResult result;
    result.theta = opt.x.head(n_theta);
    result.scale_a = with_scale ? opt.x(n_theta) : map.scale_a;
    result.trace = opt.trace;

    const auto train_out =
        predict(circuit, result.theta, result.scale_a, map, observables, dataset.inputs);
    const auto test_out =
        predict(circuit, result.theta, result.scale_a, map, observables, dataset.test_inputs);
    if (cost == CostKind::quadratic) {
        result.train_cost = quadratic_cost(train_out, dataset.teachers);
        result.test_cost =
            dataset.test_inputs.empty() ? 0.0 : quadratic_cost(test_out, dataset.test_teachers);
    } else {
        result.train_cost = cross_entropy(train_out, dataset.teachers);
        result.test_cost =
            dataset.test_inputs.empty() ? 0.0 : cross_entropy(test_out, dataset.test_teachers);
        result.train_accuracy = accuracy(train_out, dataset.teachers);
        result.test_accuracy = accuracy(test_out, dataset.test_teachers);
    }
    result.train_mse = dataset.size() ? result.train_cost / static_cast<double>(dataset.size()) : 0.0;
    result.test_mse = dataset.test_inputs.empty()
                          ? 0.0
                          : result.test_cost / static_cast<double>(dataset.test_inputs.size());
    return result;
}

}  // namespace qcl
