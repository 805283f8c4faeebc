// Experiment harness CLI: config-driven runs, plotting, gradient self-check.

#include <iostream>

#include <CLI11.hpp>

#include "qcl/experiment.hpp"

namespace {

void print_error(const std::string& kind, const std::string& message) {
    qcl::Json err;
    err["error"] = kind;
    err["message"] = message;
    std::cerr << err.dump() << "\n";
}

int run_gradcheck(int instances, std::uint64_t seed) {
    using namespace qcl;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        const IsingHamiltonian ham = sample_coefficients(4, rng());
        Circuit c;
        c.num_qubits = 4;
        c.depth = 2;
        c.encoding = EncodingSpec{EncodingKind::ry_rz, 4, 1};
        c.evolution = evolution_gate(ham, 1.0);
        const ParameterVector theta = random_parameters(c, rng());
        const Eigen::VectorXd x = detail::scalar_vec(uni(rng));
        const PauliString z1 = PauliString::single(4, 1 + static_cast<int>(rng() % 4), Pauli::Z);
        const GradientVector ps = param_shift_grad(c, theta, x, z1);
        const GradientVector fd = finite_diff_grad(c, theta, x, z1, 1e-4);
        worst = std::max(worst, (ps - fd).cwiseAbs().maxCoeff());
    }
    std::cout << "gradcheck: " << instances
              << " random circuits, max |param-shift - finite-diff| = " << worst << "\n";
    if (worst < 1e-6) {
        std::cout << "gradcheck: PASS\n";
        return 0;
    }
    std::cout << "gradcheck: FAIL\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum circuit learning experiment harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string run_dir;
    std::string out_dir_override;
    std::int64_t seed_override = -1;
    int gradcheck_instances = 100;

    auto* run_cmd = app.add_subcommand("run", "execute an experiment from a JSON config");
    run_cmd->add_option("config", config_path, "path to config.json")->required();
    run_cmd->add_option("--out-dir", out_dir_override, "override the output directory");
    run_cmd->add_option("--seed-override", seed_override,
                        "override the theta seed of the config");

    auto* plot_cmd = app.add_subcommand("plot", "render SVG plots for a finished run");
    plot_cmd->add_option("run_dir", run_dir, "run directory containing CSV artifacts")
        ->required();

    auto* grad_cmd = app.add_subcommand("gradcheck", "parameter-shift vs finite-difference check");
    grad_cmd->add_option("--instances", gradcheck_instances, "number of random circuits");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            qcl::ExperimentConfig config = qcl::load_config(config_path);
            if (!out_dir_override.empty()) config.out_dir = out_dir_override;
            if (seed_override >= 0)
                config.seeds.theta = static_cast<std::uint64_t>(seed_override);
            const qcl::RunArtifacts artifacts = qcl::run(config);
            qcl::emit_plots(artifacts.dir);
            std::cout << artifacts.summary.dump(2) << "\n";
            std::cout << "artifacts written to " << artifacts.dir.string() << "\n";
            return 0;
        }
        if (plot_cmd->parsed()) {
            for (const auto& p : qcl::emit_plots(run_dir))
                std::cout << "wrote " << p.string() << "\n";
            return 0;
        }
        return run_gradcheck(gradcheck_instances, 2024);
    } catch (const std::invalid_argument& e) {
        print_error("validation", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("runtime", e.what());
        return 1;
    }
}
