#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcl {

// value and gradient at x; gradient written into `grad` (pre-sized).
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct TrainRecord {
    int iteration = 0;
    double cost = 0.0;
    double grad_norm = 0.0;  // max-norm
    double elapsed_s = 0.0;  // informational only, not serialized
};

struct MinimizeOptions {
    double gtol = 1e-5;      // max-norm convergence threshold
    int max_iterations = 200;
    bool check_gradient = true;  // directional finite-difference check on first call
    double check_tolerance = 1e-5;
    std::uint64_t check_seed = 17;
};

struct MinimizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    bool converged = false;
    std::string message;
    std::vector<TrainRecord> trace;
};

namespace detail {

// Strong Wolfe line search, bracket-and-zoom (c1 = 1e-4, c2 = 0.9).
// phi(a) = f(x + a d). Returns step length, or 0 on failure.
struct LineSearchResult {
    double step = 0.0;
    double value = 0.0;
    Eigen::VectorXd x;
    Eigen::VectorXd grad;
    bool ok = false;
};

inline LineSearchResult wolfe_line_search(const Objective& f, const Eigen::VectorXd& x0,
                                          double f0, const Eigen::VectorXd& g0,
                                          const Eigen::VectorXd& dir) {
    constexpr double c1 = 1e-4;
    constexpr double c2 = 0.9;
    const double dphi0 = g0.dot(dir);
    LineSearchResult r;
    if (dphi0 >= 0.0) return r;  // not a descent direction

    Eigen::VectorXd grad(x0.size());
    auto eval = [&](double a, double& val, double& dphi) {
        r.x = x0 + a * dir;
        val = f(r.x, grad);
        dphi = grad.dot(dir);
    };

    auto zoom = [&](double lo, double flo, double hi, double fhi) {
        for (int i = 0; i < 30; ++i) {
            const double a = 0.5 * (lo + hi);
            double fa, dfa;
            eval(a, fa, dfa);
            if (!std::isfinite(fa)) { hi = a; fhi = fa; continue; }
            if (fa > f0 + c1 * a * dphi0 || fa >= flo) {
                hi = a;
                fhi = fa;
            } else {
                if (std::abs(dfa) <= -c2 * dphi0) {
                    r.step = a;
                    r.value = fa;
                    r.grad = grad;
                    r.ok = true;
                    return;
                }
                if (dfa * (hi - lo) >= 0.0) { hi = lo; fhi = flo; }
                lo = a;
                flo = fa;
            }
        }
    };

    double a_prev = 0.0, f_prev = f0, dphi_prev = dphi0;
    double a = 1.0;
    for (int i = 0; i < 20; ++i) {
        double fa, dfa;
        eval(a, fa, dfa);
        if (!std::isfinite(fa) || fa > f0 + c1 * a * dphi0 || (i > 0 && fa >= f_prev)) {
            zoom(a_prev, f_prev, a, fa);
            return r;
        }
        if (std::abs(dfa) <= -c2 * dphi0) {
            r.step = a;
            r.value = fa;
            r.grad = grad;
            r.ok = true;
            return r;
        }
        if (dfa >= 0.0) {
            zoom(a, fa, a_prev, f_prev);
            return r;
        }
        a_prev = a;
        f_prev = fa;
        dphi_prev = dfa;
        a *= 2.0;
    }
    (void)dphi_prev;
    return r;
}

}  // namespace detail

// BFGS with dense inverse-Hessian updates and a strong Wolfe line search.
// On line-search failure, falls back to a halved steepest-descent step.
inline MinimizeResult minimize(const Objective& objective, const Eigen::VectorXd& x0,
                               const MinimizeOptions& options = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const Eigen::Index n = x0.size();
    Eigen::VectorXd x = x0;
    Eigen::VectorXd g(n);
    double fx = objective(x, g);

    MinimizeResult result;
    if (!std::isfinite(fx)) {
        result.x = x;
        result.value = fx;
        result.message = "non-finite objective at start";
        return result;
    }

    if (options.check_gradient) {
        std::mt19937_64 rng(options.check_seed);
        std::normal_distribution<double> gauss;
        Eigen::VectorXd dir(n);
        for (Eigen::Index i = 0; i < n; ++i) dir(i) = gauss(rng);
        dir.normalize();
        const double h = 1e-5;
        Eigen::VectorXd scratch(n);
        const double fp = objective(x + h * dir, scratch);
        const double fm = objective(x - h * dir, scratch);
        const double fd = (fp - fm) / (2.0 * h);
        const double an = g.dot(dir);
        if (std::abs(fd - an) > options.check_tolerance * std::max(1.0, std::abs(an)))
            throw std::runtime_error("objective gradient inconsistent with finite differences");
    }

    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
    result.trace.push_back({0, fx, g.cwiseAbs().maxCoeff(), elapsed()});

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        if (g.cwiseAbs().maxCoeff() < options.gtol) {
            result.converged = true;
            result.message = "gradient below tolerance";
            break;
        }
        Eigen::VectorXd dir = -(h_inv * g);
        detail::LineSearchResult ls = detail::wolfe_line_search(objective, x, fx, g, dir);
        if (!ls.ok) {
            // Steepest-descent fallback with step halving.
            dir = -g;
            double a = 1.0;
            Eigen::VectorXd gtry(n);
            bool moved = false;
            for (int k = 0; k < 40; ++k) {
                Eigen::VectorXd xtry = x + a * dir;
                const double ftry = objective(xtry, gtry);
                if (std::isfinite(ftry) && ftry < fx) {
                    ls.x = std::move(xtry);
                    ls.value = ftry;
                    ls.grad = gtry;
                    moved = true;
                    break;
                }
                a /= 2.0;
            }
            if (!moved) {
                result.message = "line search failed; no descent step found";
                break;
            }
            h_inv = Eigen::MatrixXd::Identity(n, n);  // curvature info is stale
        }

        const Eigen::VectorXd s = ls.x - x;
        const Eigen::VectorXd y = ls.grad - g;
        x = ls.x;
        fx = ls.value;
        g = ls.grad;

        const double sy = s.dot(y);
        if (sy > 1e-12) {
            const double rho = 1.0 / sy;
            const Eigen::VectorXd hy = h_inv * y;
            // BFGS inverse update: H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            h_inv.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
            h_inv.noalias() += (rho * rho * y.dot(hy) + rho) * (s * s.transpose());
        }

        result.trace.push_back({iter, fx, g.cwiseAbs().maxCoeff(), elapsed()});
        if (!std::isfinite(fx)) {
            result.message = "non-finite objective encountered";
            break;
        }
    }

    if (result.message.empty()) result.message = "iteration limit reached";
    if (g.cwiseAbs().maxCoeff() < options.gtol) result.converged = true;
    result.x = x;
    result.value = fx;
    return result;
}

}  // namespace qcl
