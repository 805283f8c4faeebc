#pragma once

#include <ctime>
#include <optional>

#include <nlohmann/json.hpp>

#include "qcl/baseline.hpp"
#include "qcl/dynamics.hpp"
#include "qcl/io.hpp"

namespace qcl {

using Json = nlohmann::ordered_json;

struct SeedBundle {
    std::uint64_t hamiltonian = 11;
    std::uint64_t theta = 22;
    std::uint64_t data = 33;
    std::uint64_t noise = 44;
    std::uint64_t teacher_hamiltonian = 55;
};

struct ExperimentConfig {
    int schema_version = 1;
    std::string task;            // fit1d | classify2d | dynamics | overfit_appendix
    std::string target = "x2";   // fit1d / overfit_appendix: x2 | exp | sin | abs
    int num_qubits = 6;
    int depth = 6;
    double evolution_time = 10.0;
    std::string encoding = "ry_rz";
    int train_samples = 100;     // per class for classify2d, per grid for dynamics
    SeedBundle seeds;
    NoiseModel noise;
    double gtol = 1e-6;
    int max_iterations = 300;
    std::vector<int> observed_spins = {1, 2, 3};  // dynamics only
    std::string out_dir;
    // When present, these override sampling from seeds.hamiltonian so a
    // published run re-executes with the exact same circuit Hamiltonian.
    std::optional<IsingHamiltonian> hamiltonian_coefficients;
};

inline ExperimentConfig default_config(const std::string& task) {
    ExperimentConfig c;
    c.task = task;
    if (task == "fit1d") {
        c.encoding = "ry_rz";
    } else if (task == "classify2d") {
        c.encoding = "multi_dim";
        c.max_iterations = 200;
    } else if (task == "dynamics") {
        c.encoding = "ry_rz";
        c.max_iterations = 500;
    } else if (task == "overfit_appendix") {
        c.num_qubits = 3;
        c.depth = 3;
        c.encoding = "ry_only";
        c.train_samples = 7;
        c.target = "sin";
        c.max_iterations = 500;
    } else {
        throw std::invalid_argument("config field 'task': unknown value '" + task + "'");
    }
    return c;
}

namespace detail {

inline void validate_keys(const Json& j, const std::vector<std::string>& allowed,
                          const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw std::invalid_argument("config field '" + where + it.key() + "': unknown field");
    }
}

}  // namespace detail

inline Json to_json(const ExperimentConfig& c) {
    Json j;
    j["schema_version"] = c.schema_version;
    j["task"] = c.task;
    j["target"] = c.target;
    j["num_qubits"] = c.num_qubits;
    j["depth"] = c.depth;
    j["evolution_time"] = c.evolution_time;
    j["encoding"] = c.encoding;
    j["train_samples"] = c.train_samples;
    j["seeds"] = {{"hamiltonian", c.seeds.hamiltonian},
                  {"theta", c.seeds.theta},
                  {"data", c.seeds.data},
                  {"noise", c.seeds.noise},
                  {"teacher_hamiltonian", c.seeds.teacher_hamiltonian}};
    j["noise"] = {{"enabled", c.noise.enabled}, {"shots", c.noise.shots}};
    j["optimizer"] = {{"gtol", c.gtol}, {"max_iterations", c.max_iterations}};
    j["observed_spins"] = c.observed_spins;
    j["out_dir"] = c.out_dir;
    if (c.hamiltonian_coefficients) {
        const auto& h = *c.hamiltonian_coefficients;
        std::vector<double> field(h.field.data(), h.field.data() + h.field.size());
        std::vector<std::vector<double>> coupling;
        for (int r = 0; r < h.num_qubits; ++r) {
            std::vector<double> row;
            for (int col = 0; col < r; ++col) row.push_back(h.coupling(r, col));
            coupling.push_back(std::move(row));
        }
        j["hamiltonian_coefficients"] = {{"field", field}, {"coupling", coupling}};
    }
    return j;
}

inline ExperimentConfig config_from_json(const Json& j) {
    if (!j.contains("task")) throw std::invalid_argument("config field 'task': missing");
    ExperimentConfig c = default_config(j.at("task").get<std::string>());
    detail::validate_keys(
        j,
        {"schema_version", "task", "target", "num_qubits", "depth", "evolution_time", "encoding",
         "train_samples", "seeds", "noise", "optimizer", "observed_spins", "out_dir",
         "hamiltonian_coefficients"},
        "");
    if (j.contains("schema_version")) {
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != 1)
            throw std::invalid_argument("config field 'schema_version': unsupported version");
    }
    if (j.contains("target")) c.target = j.at("target").get<std::string>();
    if (c.target != "x2" && c.target != "exp" && c.target != "sin" && c.target != "abs")
        throw std::invalid_argument("config field 'target': unknown value '" + c.target + "'");
    if (j.contains("num_qubits")) c.num_qubits = j.at("num_qubits").get<int>();
    if (c.num_qubits < 1 || c.num_qubits > kMaxQubits)
        throw std::invalid_argument("config field 'num_qubits': out of range");
    if (j.contains("depth")) c.depth = j.at("depth").get<int>();
    if (c.depth < 1) throw std::invalid_argument("config field 'depth': must be positive");
    if (j.contains("evolution_time")) c.evolution_time = j.at("evolution_time").get<double>();
    if (j.contains("encoding")) c.encoding = j.at("encoding").get<std::string>();
    encoding_kind_from_string(c.encoding);  // validates
    if (j.contains("train_samples")) c.train_samples = j.at("train_samples").get<int>();
    if (c.train_samples < 1)
        throw std::invalid_argument("config field 'train_samples': must be positive");
    if (j.contains("seeds")) {
        const Json& s = j.at("seeds");
        detail::validate_keys(s, {"hamiltonian", "theta", "data", "noise", "teacher_hamiltonian"},
                              "seeds.");
        if (s.contains("hamiltonian")) c.seeds.hamiltonian = s.at("hamiltonian").get<std::uint64_t>();
        if (s.contains("theta")) c.seeds.theta = s.at("theta").get<std::uint64_t>();
        if (s.contains("data")) c.seeds.data = s.at("data").get<std::uint64_t>();
        if (s.contains("noise")) c.seeds.noise = s.at("noise").get<std::uint64_t>();
        if (s.contains("teacher_hamiltonian"))
            c.seeds.teacher_hamiltonian = s.at("teacher_hamiltonian").get<std::uint64_t>();
    }
    if (j.contains("noise")) {
        const Json& n = j.at("noise");
        detail::validate_keys(n, {"enabled", "shots"}, "noise.");
        if (n.contains("enabled")) c.noise.enabled = n.at("enabled").get<bool>();
        if (n.contains("shots")) c.noise.shots = n.at("shots").get<int>();
        if (c.noise.enabled && c.noise.shots < 1)
            throw std::invalid_argument("config field 'noise.shots': must be >= 1 when enabled");
    }
    c.noise.rng_seed = c.seeds.noise;
    if (j.contains("optimizer")) {
        const Json& o = j.at("optimizer");
        detail::validate_keys(o, {"gtol", "max_iterations"}, "optimizer.");
        if (o.contains("gtol")) c.gtol = o.at("gtol").get<double>();
        if (o.contains("max_iterations")) c.max_iterations = o.at("max_iterations").get<int>();
    }
    if (j.contains("observed_spins"))
        c.observed_spins = j.at("observed_spins").get<std::vector<int>>();
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("hamiltonian_coefficients")) {
        const Json& h = j.at("hamiltonian_coefficients");
        detail::validate_keys(h, {"field", "coupling"}, "hamiltonian_coefficients.");
        IsingHamiltonian ham;
        auto field = h.at("field").get<std::vector<double>>();
        if (static_cast<int>(field.size()) != c.num_qubits)
            throw std::invalid_argument(
                "config field 'hamiltonian_coefficients.field': wrong length");
        ham.num_qubits = c.num_qubits;
        ham.field = Eigen::Map<Eigen::VectorXd>(field.data(), c.num_qubits);
        ham.coupling = Eigen::MatrixXd::Zero(c.num_qubits, c.num_qubits);
        auto coupling = h.at("coupling").get<std::vector<std::vector<double>>>();
        if (static_cast<int>(coupling.size()) != c.num_qubits)
            throw std::invalid_argument(
                "config field 'hamiltonian_coefficients.coupling': wrong shape");
        for (int r = 0; r < c.num_qubits; ++r) {
            if (static_cast<int>(coupling[r].size()) != r)
                throw std::invalid_argument(
                    "config field 'hamiltonian_coefficients.coupling': wrong shape");
            for (int col = 0; col < r; ++col) ham.coupling(r, col) = coupling[r][col];
        }
        c.hamiltonian_coefficients = std::move(ham);
    }
    return c;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    Json j;
    in >> j;
    return config_from_json(j);
}

struct RunArtifacts {
    std::filesystem::path dir;
    Json summary;
};

namespace detail {

inline double target_fn(const std::string& target, double x) {
    if (target == "x2") return x * x;
    if (target == "exp") return std::exp(x);
    if (target == "sin") return std::sin(x);
    if (target == "abs") return std::abs(x);
    throw std::invalid_argument("unknown target: " + target);
}

inline Eigen::VectorXd scalar_vec(double v) {
    Eigen::VectorXd x(1);
    x(0) = v;
    return x;
}

inline Circuit build_circuit(const ExperimentConfig& c, const IsingHamiltonian& ham,
                             int input_dim) {
    Circuit circuit;
    circuit.num_qubits = c.num_qubits;
    circuit.depth = c.depth;
    circuit.encoding =
        EncodingSpec{encoding_kind_from_string(c.encoding), c.num_qubits, input_dim};
    circuit.evolution = evolution_gate(ham, c.evolution_time);
    return circuit;
}

inline void write_trace(const std::filesystem::path& dir, const std::vector<TrainRecord>& trace) {
    CsvTable t;
    t.header = {"iteration", "cost", "grad_norm"};
    for (const auto& rec : trace)
        t.rows.push_back({static_cast<double>(rec.iteration), rec.cost, rec.grad_norm});
    t.write(dir / "trace.csv");
}

// Two-class layout: class 0 uniform in a
// disk of radius 0.4 at the origin, class 1 uniform in the 0.7..1.0 annulus.
inline Dataset make_circle_dataset(int per_class_train, int per_class_test, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto draw = [&](int cls) {
        const double r = cls == 0 ? 0.4 * std::sqrt(uni(rng))
                                  : std::sqrt(0.49 + (1.0 - 0.49) * uni(rng));
        const double phi = 2.0 * M_PI * uni(rng);
        Eigen::VectorXd x(2);
        x(0) = r * std::cos(phi);
        x(1) = r * std::sin(phi);
        return x;
    };
    auto one_hot = [](int cls) {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(2);
        f(cls) = 1.0;
        return f;
    };
    Dataset d;
    for (int cls = 0; cls < 2; ++cls)
        for (int i = 0; i < per_class_train; ++i) {
            d.inputs.push_back(draw(cls));
            d.teachers.push_back(one_hot(cls));
        }
    for (int cls = 0; cls < 2; ++cls)
        for (int i = 0; i < per_class_test; ++i) {
            d.test_inputs.push_back(draw(cls));
            d.test_teachers.push_back(one_hot(cls));
        }
    return d;
}

}  // namespace detail

inline std::filesystem::path resolve_out_dir(const ExperimentConfig& c) {
    if (!c.out_dir.empty()) return c.out_dir;
    std::ostringstream name;
    name << "runs/" << c.task;
    if (c.task == "fit1d" || c.task == "overfit_appendix") name << "-" << c.target;
    name << "-h" << c.seeds.hamiltonian << "-t" << c.seeds.theta << "-"
         << static_cast<long long>(std::time(nullptr));
    return name.str();
}

inline RunArtifacts run(const ExperimentConfig& config) {
    const std::filesystem::path dir = resolve_out_dir(config);
    std::filesystem::create_directories(dir);

    ExperimentConfig resolved = config;
    IsingHamiltonian ham =
        resolved.hamiltonian_coefficients
            ? *resolved.hamiltonian_coefficients
            : sample_coefficients(resolved.num_qubits, resolved.seeds.hamiltonian);
    resolved.hamiltonian_coefficients = ham;
    resolved.out_dir = dir.string();

    TrainOptions topt;
    topt.minimize.gtol = resolved.gtol;
    topt.minimize.max_iterations = resolved.max_iterations;
    topt.noise = resolved.noise;

    Json summary;
    summary["task"] = resolved.task;
    summary["seeds"] = to_json(resolved)["seeds"];

    if (resolved.task == "fit1d" || resolved.task == "overfit_appendix") {
        const bool appendix = resolved.task == "overfit_appendix";
        const Circuit circuit = detail::build_circuit(resolved, ham, 1);
        const ObservableSet obs = ObservableSet::first_qubits_z(resolved.num_qubits, 1);
        auto f = [&](double x) {
            const double v = detail::target_fn(resolved.target, x);
            return appendix && resolved.target == "sin" ? 0.5 * v : v;
        };

        Dataset data;
        std::mt19937_64 rng(resolved.seeds.data);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 0.05);
        for (int i = 0; i < resolved.train_samples; ++i) {
            const double x = uni(rng);
            const double y = f(x) + (appendix ? gauss(rng) : 0.0);
            data.inputs.push_back(detail::scalar_vec(x));
            data.teachers.push_back(detail::scalar_vec(y));
        }
        if (appendix) {
            for (double x : uniform_grid(41, -0.999, 0.999)) {
                data.test_inputs.push_back(detail::scalar_vec(x));
                data.test_teachers.push_back(detail::scalar_vec(f(x)));
            }
        } else {
            for (int i = 0; i < resolved.train_samples; ++i) {
                const double x = uni(rng);
                data.test_inputs.push_back(detail::scalar_vec(x));
                data.test_teachers.push_back(detail::scalar_vec(f(x)));
            }
        }

        OutputMap map;
        map.kind = OutputKind::scaled_identity;
        map.scale_a = 1.0;
        map.train_scale = !appendix;  // appendix fixes a = 1

        const ParameterVector theta0 = random_parameters(circuit, resolved.seeds.theta);
        const TrainResult result = train(circuit, data, map, CostKind::quadratic, obs,
                                         resolved.seeds.theta, topt);

        detail::write_trace(dir, result.trace);
        CsvTable pred;
        pred.header = {"x", "teacher", "initial", "final"};
        for (std::size_t i = 0; i < data.inputs.size(); ++i) {
            const double x = data.inputs[i](0);
            pred.rows.push_back(
                {x, data.teachers[i](0),
                 forward(circuit, theta0, data.inputs[i], obs)(0),
                 result.scale_a * forward(circuit, result.theta, data.inputs[i], obs)(0)});
        }
        std::sort(pred.rows.begin(), pred.rows.end());
        pred.write(dir / "predictions.csv");

        summary["target"] = resolved.target;
        summary["train_mse"] = result.train_mse;
        summary["test_mse"] = result.test_mse;
        summary["train_cost"] = result.train_cost;
        summary["test_cost"] = result.test_cost;
        summary["scale_a"] = result.scale_a;
        summary["iterations"] = result.trace.back().iteration;

        if (appendix) {
            const BasisSet basis = three_qubit_basis();
            const LinearModel classical = least_squares_fit(basis, data);
            double classical_train = 0.0;
            for (std::size_t i = 0; i < data.inputs.size(); ++i) {
                const double r = data.teachers[i](0) - classical.predict(basis, data.inputs[i](0));
                classical_train += r * r;
            }
            double classical_test = 0.0;
            for (std::size_t i = 0; i < data.test_inputs.size(); ++i) {
                const double r =
                    data.test_teachers[i](0) - classical.predict(basis, data.test_inputs[i](0));
                classical_test += r * r;
            }
            classical_test /= static_cast<double>(data.test_inputs.size());
            summary["classical_train_cost"] = classical_train;
            summary["classical_test_mse"] = classical_test;
            summary["classical_weight_norm"] = weight_norm(classical);
            summary["classical_rank_deficient"] = classical.rank_deficient;

            CsvTable curves;
            curves.header = {"x", "true_fn", "qcl_final", "classical"};
            for (double x : uniform_grid(201, -0.999, 0.999))
                curves.rows.push_back(
                    {x, f(x),
                     forward(circuit, result.theta, detail::scalar_vec(x), obs)(0),
                     classical.predict(basis, x)});
            curves.write(dir / "curves.csv");
        }
    } else if (resolved.task == "classify2d") {
        const Circuit circuit = detail::build_circuit(resolved, ham, 2);
        const ObservableSet obs = ObservableSet::first_qubits_z(resolved.num_qubits, 2);
        const Dataset data = detail::make_circle_dataset(resolved.train_samples,
                                                         resolved.train_samples,
                                                         resolved.seeds.data);
        OutputMap map;
        map.kind = OutputKind::softmax;
        const TrainResult result = train(circuit, data, map, CostKind::cross_entropy, obs,
                                         resolved.seeds.theta, topt);

        detail::write_trace(dir, result.trace);
        CsvTable points;
        points.header = {"x0", "x1", "class", "p0_final"};
        auto add_points = [&](const std::vector<Eigen::VectorXd>& xs,
                              const std::vector<Eigen::VectorXd>& fs) {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const Eigen::VectorXd p =
                    softmax(forward(circuit, result.theta, xs[i], obs));
                points.rows.push_back({xs[i](0), xs[i](1), fs[i](1), p(0)});
            }
        };
        add_points(data.inputs, data.teachers);
        points.write(dir / "points.csv");

        // Class-0 probability over a grid for the decision plot.
        CsvTable grid;
        grid.header = {"x0", "x1", "p0"};
        const auto axis = uniform_grid(41);
        for (double x1 : axis)
            for (double x0 : axis) {
                Eigen::VectorXd x(2);
                x << x0, x1;
                grid.rows.push_back(
                    {x0, x1, softmax(forward(circuit, result.theta, x, obs))(0)});
            }
        grid.write(dir / "grid.csv");

        summary["train_accuracy"] = result.train_accuracy;
        summary["test_accuracy"] = result.test_accuracy;
        summary["train_cross_entropy"] = result.train_cost;
        summary["test_cross_entropy"] = result.test_cost;
        summary["iterations"] = result.trace.back().iteration;
    } else if (resolved.task == "dynamics") {
        if (resolved.seeds.teacher_hamiltonian == resolved.seeds.hamiltonian)
            throw std::invalid_argument(
                "config field 'seeds.teacher_hamiltonian': must differ from circuit seed");
        DynamicsTask task;
        task.samples = resolved.train_samples;
        task.observed_spins = resolved.observed_spins;
        DynamicsTeacher teacher = generate_teacher(task, resolved.seeds.teacher_hamiltonian,
                                                   resolved.seeds.hamiltonian);
        // Held-out samples at grid midpoints from the same teacher dynamics.
        const HamiltonianSpectrum teacher_spec = diagonalize(teacher.hamiltonian);
        std::vector<double> mid;
        const double step = 2.0 / (task.samples - 1);
        for (int i = 0; i + 1 < task.samples; ++i) mid.push_back(-1.0 + (i + 0.5) * step);
        const auto mid_teachers = teacher_values(teacher_spec, task, mid);
        for (std::size_t i = 0; i < mid.size(); ++i) {
            teacher.dataset.test_inputs.push_back(detail::scalar_vec(mid[i]));
            teacher.dataset.test_teachers.push_back(mid_teachers[i]);
        }

        CsvTable tcsv;
        tcsv.header = {"x", "z1", "z2", "z3"};
        for (std::size_t i = 0; i < teacher.dataset.inputs.size(); ++i) {
            const auto& t = teacher.dataset.teachers[i];
            tcsv.rows.push_back({teacher.dataset.inputs[i](0), t(0), t(1), t(2)});
        }
        tcsv.write(dir / "teacher.csv");

        const Circuit circuit = detail::build_circuit(resolved, ham, 1);
        const int n_out = static_cast<int>(task.observed_spins.size());
        const ObservableSet obs = ObservableSet::first_qubits_z(resolved.num_qubits, n_out);
        OutputMap map;  // a fixed to unity
        const ParameterVector theta0 = random_parameters(circuit, resolved.seeds.theta);
        const TrainResult result = train(circuit, teacher.dataset, map, CostKind::quadratic, obs,
                                         resolved.seeds.theta, topt);

        detail::write_trace(dir, result.trace);
        CsvTable pred;
        pred.header = {"x"};
        for (int k = 1; k <= n_out; ++k) {
            pred.header.push_back("teacher" + std::to_string(k));
            pred.header.push_back("initial" + std::to_string(k));
            pred.header.push_back("final" + std::to_string(k));
        }
        Eigen::VectorXd per_output_sse = Eigen::VectorXd::Zero(n_out);
        for (std::size_t i = 0; i < teacher.dataset.inputs.size(); ++i) {
            const Eigen::VectorXd zi = forward(circuit, theta0, teacher.dataset.inputs[i], obs);
            const Eigen::VectorXd zf =
                forward(circuit, result.theta, teacher.dataset.inputs[i], obs);
            std::vector<double> row = {teacher.dataset.inputs[i](0)};
            for (int k = 0; k < n_out; ++k) {
                row.push_back(teacher.dataset.teachers[i](k));
                row.push_back(zi(k));
                row.push_back(zf(k));
                per_output_sse(k) += std::pow(zf(k) - teacher.dataset.teachers[i](k), 2);
            }
            pred.rows.push_back(std::move(row));
        }
        pred.write(dir / "predictions.csv");

        summary["train_mse"] = result.train_mse;
        summary["test_mse"] = result.test_mse;
        std::vector<double> per_output;
        for (int k = 0; k < n_out; ++k)
            per_output.push_back(per_output_sse(k) /
                                 static_cast<double>(teacher.dataset.inputs.size()));
        summary["per_output_train_mse"] = per_output;
        summary["iterations"] = result.trace.back().iteration;
    } else {
        throw std::invalid_argument("config field 'task': unknown value '" + resolved.task + "'");
    }

    std::ofstream cfg(dir / "config.json");
    cfg << to_json(resolved).dump(2) << "\n";
    std::ofstream sum(dir / "summary.json");
    sum << summary.dump(2) << "\n";
    return RunArtifacts{dir, summary};
}

// Renders the run's SVG panels from its CSV artifacts.
inline std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& run_dir) {
    std::ifstream cfg_in(run_dir / "config.json");
    if (!cfg_in) throw std::runtime_error("missing config.json in " + run_dir.string());
    Json cfg;
    cfg_in >> cfg;
    const std::string task = cfg.at("task").get<std::string>();
    std::vector<std::filesystem::path> written;

    auto column_of = [](const CsvTable& t, int col) {
        std::vector<double> v;
        v.reserve(t.rows.size());
        for (const auto& row : t.rows) v.push_back(row[static_cast<std::size_t>(col)]);
        return v;
    };

    if (task == "fit1d" || task == "overfit_appendix" || task == "dynamics") {
        const CsvTable pred = CsvTable::read(run_dir / "predictions.csv");
        if (pred.rows.empty()) throw std::runtime_error("predictions.csv has no data rows");
        const auto xs = column_of(pred, pred.column("x"));
        double ymin = 1e300, ymax = -1e300;
        for (const auto& row : pred.rows)
            for (std::size_t i = 1; i < row.size(); ++i) {
                ymin = std::min(ymin, row[i]);
                ymax = std::max(ymax, row[i]);
            }
        const double pad = 0.1 * (ymax - ymin + 1e-12);
        if (task == "dynamics") {
            for (int k = 1; pred.header.size() > static_cast<std::size_t>(3 * k); ++k) {
                SvgPlot plot(-1, 1, ymin - pad, ymax + pad,
                             "dynamics output " + std::to_string(k));
                plot.add_line(xs, column_of(pred, pred.column("teacher" + std::to_string(k))),
                              "black", "teacher");
                plot.add_line(xs, column_of(pred, pred.column("initial" + std::to_string(k))),
                              "steelblue", "initial");
                plot.add_line(xs, column_of(pred, pred.column("final" + std::to_string(k))),
                              "crimson", "final");
                const auto path = run_dir / ("dynamics_z" + std::to_string(k) + ".svg");
                plot.write(path);
                written.push_back(path);
            }
        } else {
            const std::string title =
                task == "fit1d" ? "fit " + cfg.at("target").get<std::string>()
                                : "appendix fit " + cfg.at("target").get<std::string>();
            SvgPlot plot(-1, 1, ymin - pad, ymax + pad, title);
            plot.add_line(xs, column_of(pred, pred.column("teacher")), "black", "teacher");
            plot.add_line(xs, column_of(pred, pred.column("initial")), "steelblue", "initial");
            plot.add_line(xs, column_of(pred, pred.column("final")), "crimson", "final");
            const auto path = run_dir / (task + ".svg");
            plot.write(path);
            written.push_back(path);
        }
    } else if (task == "classify2d") {
        const CsvTable points = CsvTable::read(run_dir / "points.csv");
        const CsvTable grid = CsvTable::read(run_dir / "grid.csv");
        if (points.rows.empty()) throw std::runtime_error("points.csv has no data rows");
        SvgPlot plot(-1.05, 1.05, -1.05, 1.05, "classification decision map");
        const double cell = 2.0 / 40.0;
        for (const auto& row : grid.rows)
            plot.add_heat_cell(row[0], row[1], cell, cell, 1.0 - row[2]);
        std::vector<double> x0a, x1a, x0b, x1b;
        for (const auto& row : points.rows) {
            if (row[2] < 0.5) {
                x0a.push_back(row[0]);
                x1a.push_back(row[1]);
            } else {
                x0b.push_back(row[0]);
                x1b.push_back(row[1]);
            }
        }
        plot.add_points(x0a, x1a, "blue", "class 0");
        plot.add_points(x0b, x1b, "red", "class 1");
        const auto path = run_dir / "classify2d.svg";
        plot.write(path);
        written.push_back(path);
    } else {
        throw std::runtime_error("unknown task in config.json: " + task);
    }
    return written;
}

}  // namespace qcl
