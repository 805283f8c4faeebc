#include <catch2/catch_amalgamated.hpp>

#include "qcl/grad.hpp"
#include "oracles.hpp"

using namespace qcl;
using Catch::Approx;

namespace {

Circuit make_circuit(int n, int depth, std::uint64_t ham_seed, double time) {
    Circuit c;
    c.num_qubits = n;
    c.depth = depth;
    c.encoding = EncodingSpec{EncodingKind::ry_rz, n, 1};
    c.evolution = evolution_gate(sample_coefficients(n, ham_seed), time);
    return c;
}

}  // namespace

TEST_CASE("parameter-shift gradient closed forms") {
    SECTION("1-qubit R^X circuit: d<Z>/dtheta = -sin(theta)") {
        Circuit c;
        c.num_qubits = 1;
        c.depth = 1;
        c.encoding = EncodingSpec{EncodingKind::ry_only, 1, 1};
        c.evolution = EvolutionGate{0.0, Matrix::Identity(2, 2)};
        ParameterVector theta = ParameterVector::Zero(3);
        theta(0) = 0.3;
        Eigen::VectorXd x(1);
        x << 0.0;
        const GradientVector g = param_shift_grad(c, theta, x, PauliString("Z"));
        REQUIRE(g(0) == Approx(-std::sin(0.3)).margin(1e-10));
        REQUIRE(g(0) == Approx(-0.29552).margin(1e-5));
    }

    SECTION("gradient vanishes at an extremum") {
        Circuit c;
        c.num_qubits = 1;
        c.depth = 1;
        c.encoding = EncodingSpec{EncodingKind::ry_only, 1, 1};
        c.evolution = EvolutionGate{0.0, Matrix::Identity(2, 2)};
        const ParameterVector theta = ParameterVector::Zero(3);  // <Z> = 1, a maximum
        Eigen::VectorXd x(1);
        x << 0.0;
        const GradientVector g = param_shift_grad(c, theta, x, PauliString("Z"));
        REQUIRE(g.cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("parameter shift agrees with finite differences") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const Circuit c = make_circuit(4, 2, rng(), 1.0);
        const ParameterVector theta = random_parameters(c, rng());
        Eigen::VectorXd x(1);
        x << uni(rng);
        const PauliString obs = PauliString::single(4, 1 + static_cast<int>(rng() % 4), Pauli::Z);
        const GradientVector ps = param_shift_grad(c, theta, x, obs);
        const GradientVector fd = finite_diff_grad(c, theta, x, obs, 1e-4);
        REQUIRE((ps - fd).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("finite differences") {
    const Circuit c = make_circuit(2, 1, 3, 1.0);
    const ParameterVector theta = random_parameters(c, 4);
    Eigen::VectorXd x(1);
    x << 0.5;
    const PauliString obs = PauliString::single(2, 1, Pauli::Z);

    SECTION("h = 0 is rejected") {
        REQUIRE_THROWS_AS(finite_diff_grad(c, theta, x, obs, 0.0), std::invalid_argument);
    }

    SECTION("consistent across step sizes") {
        // Use a circuit with a known small third derivative so the central
        // difference truncation error is well below the tolerance.
        Circuit c1;
        c1.num_qubits = 1;
        c1.depth = 1;
        c1.encoding = EncodingSpec{EncodingKind::ry_only, 1, 1};
        c1.evolution = EvolutionGate{0.0, Matrix::Identity(2, 2)};
        ParameterVector th = ParameterVector::Zero(3);
        th(0) = 0.02;  // <Z> = cos(theta), f''' = sin(theta) small but nonzero
        Eigen::VectorXd x0(1);
        x0 << 0.0;
        const PauliString z1 = PauliString::single(1, 1, Pauli::Z);
        const GradientVector a = finite_diff_grad(c1, th, x0, z1, 1e-3);
        const GradientVector b = finite_diff_grad(c1, th, x0, z1, 1e-4);
        REQUIRE(a(0) != 0.0);
        REQUIRE((a - b).cwiseAbs().maxCoeff() < 1e-7);
    }
}

TEST_CASE("gradient is linear in the observable") {
    const Circuit c = make_circuit(3, 2, 6, 10.0);
    const ParameterVector theta = random_parameters(c, 7);
    Eigen::VectorXd x(1);
    x << -0.4;
    const PauliString b1 = PauliString::single(3, 1, Pauli::Z);
    const PauliString b2 = PauliString::single(3, 2, Pauli::Z);
    ObservableSet both;
    both.observables = {b1, b2};
    const Eigen::MatrixXd jac = param_shift_jacobian(c, theta, x, both);
    const double alpha = 0.7, beta = -1.3;
    // grad of alpha <B1> + beta <B2> column-combines the jacobian
    const GradientVector combined = alpha * jac.col(0) + beta * jac.col(1);
    const GradientVector g1 = param_shift_grad(c, theta, x, b1);
    const GradientVector g2 = param_shift_grad(c, theta, x, b2);
    REQUIRE((combined - (alpha * g1 + beta * g2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("commutator identity at matrix level") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 2);
        const Pauli axis = static_cast<Pauli>(1 + rng() % 3);
        const PauliString p = PauliString::single(2, q, axis);
        const Matrix pd = p.to_dense();
        const Matrix rho = oracle::random_hermitian(4, rng);
        const Matrix up = oracle::pauli_rotation_dense(p, M_PI / 2);
        const Matrix um = oracle::pauli_rotation_dense(p, -M_PI / 2);
        const Matrix lhs = pd * rho - rho * pd;
        const Matrix rhs =
            Complex(0, 1) * (up * rho * up.adjoint() - um * rho * um.adjoint());
        REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}
