#pragma once

#include "qcl/learn.hpp"

namespace qcl {

// Many-body teacher: exact 10-spin transverse-Ising evolution sampled into a
// regression dataset over x in [-1, 1], t = (window/2)(x+1) + transient.
struct DynamicsTask {
    int teacher_qubits = 10;
    std::vector<int> observed_spins = {1, 2, 3};
    double transient = 300.0;
    double window = 8.0;
    int samples = 100;

    double time_of(double x) const { return (window / 2.0) * (x + 1.0) + transient; }
};

struct DynamicsTeacher {
    IsingHamiltonian hamiltonian;
    Dataset dataset;  // inputs: scalar x; teachers: one <Z> per observed spin
};

// <Z> of the observed spins after evolving |0...0> to t(x), for each x.
inline std::vector<Eigen::VectorXd> teacher_values(const HamiltonianSpectrum& spectrum,
                                                   const DynamicsTask& task,
                                                   const std::vector<double>& xs) {
    const int n = task.teacher_qubits;
    std::vector<Eigen::VectorXd> out;
    out.reserve(xs.size());
    for (double x : xs) {
        StateVector state{n, spectrum.evolve_zero_state(task.time_of(x))};
        Eigen::VectorXd teacher(static_cast<Eigen::Index>(task.observed_spins.size()));
        for (std::size_t s = 0; s < task.observed_spins.size(); ++s)
            teacher(static_cast<Eigen::Index>(s)) =
                expectation(state, PauliString::single(n, task.observed_spins[s], Pauli::Z));
        out.push_back(std::move(teacher));
    }
    return out;
}

inline std::vector<double> uniform_grid(int count, double lo = -1.0, double hi = 1.0) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        xs[static_cast<std::size_t>(i)] =
            count == 1 ? lo : lo + (hi - lo) * i / static_cast<double>(count - 1);
    return xs;
}

inline DynamicsTeacher generate_teacher(const DynamicsTask& task, std::uint64_t hamiltonian_seed,
                                        std::uint64_t circuit_hamiltonian_seed) {
    if (hamiltonian_seed == circuit_hamiltonian_seed)
        throw std::invalid_argument(
            "teacher Hamiltonian seed must differ from the circuit Hamiltonian seed");
    DynamicsTeacher out;
    out.hamiltonian = sample_coefficients(task.teacher_qubits, hamiltonian_seed);
    const HamiltonianSpectrum spec = diagonalize(out.hamiltonian);
    const std::vector<double> xs = uniform_grid(task.samples);
    const auto teachers = teacher_values(spec, task, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Eigen::VectorXd xv(1);
        xv(0) = xs[i];
        out.dataset.inputs.push_back(xv);
        out.dataset.teachers.push_back(teachers[i]);
    }
    return out;
}

}  // namespace qcl
