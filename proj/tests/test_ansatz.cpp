#include <catch2/catch_amalgamated.hpp>

#include "qcl/ansatz.hpp"
#include "oracles.hpp"

using namespace qcl;
using Catch::Approx;

namespace {

Circuit make_circuit(int n, int depth, EncodingKind kind, std::uint64_t ham_seed, double time) {
    Circuit c;
    c.num_qubits = n;
    c.depth = depth;
    c.encoding = EncodingSpec{kind, n, 1};
    c.evolution = evolution_gate(sample_coefficients(n, ham_seed), time);
    return c;
}

}  // namespace

TEST_CASE("parameter layout") {
    const Circuit c = make_circuit(4, 3, EncodingKind::ry_rz, 1, 1.0);
    REQUIRE(c.num_parameters() == 36);
    REQUIRE(param_index(c, 1, 1, 0) == 0);
    REQUIRE(param_index(c, 1, 1, 2) == 2);
    REQUIRE(param_index(c, 1, 2, 0) == 3);
    REQUIRE(param_index(c, 2, 1, 0) == 12);
    REQUIRE(param_index(c, 3, 4, 2) == 35);
    REQUIRE_THROWS_AS(param_index(c, 4, 1, 0), std::out_of_range);
    REQUIRE_THROWS_AS(param_index(c, 1, 5, 0), std::out_of_range);
    REQUIRE_THROWS_AS(param_index(c, 1, 1, 3), std::out_of_range);
    REQUIRE(rotation_axis(0) == Pauli::X);
    REQUIRE(rotation_axis(1) == Pauli::Z);
    REQUIRE(rotation_axis(2) == Pauli::X);
}

TEST_CASE("theta initialization is uniform on [0, 2pi] and seeded") {
    const Circuit c = make_circuit(6, 6, EncodingKind::ry_rz, 1, 1.0);
    const ParameterVector a = random_parameters(c, 5);
    REQUIRE(a == random_parameters(c, 5));
    REQUIRE(a.minCoeff() >= 0.0);
    REQUIRE(a.maxCoeff() <= 2.0 * M_PI);
    REQUIRE(a.size() == 108);
}

TEST_CASE("forward") {
    SECTION("every output stays in [-1, 1]") {
        const Circuit c = make_circuit(3, 3, EncodingKind::ry_rz, 2, 10.0);
        const ObservableSet obs = ObservableSet::first_qubits_z(3, 3);
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            const ParameterVector theta = random_parameters(c, rng());
            Eigen::VectorXd x(1);
            x << uni(rng);
            const Eigen::VectorXd out = forward(c, theta, x, obs);
            REQUIRE(out.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
        }
    }

    SECTION("N=2 D=1 matches the dense gate-product oracle") {
        const Circuit c = make_circuit(2, 1, EncodingKind::ry_rz, 3, 10.0);
        const ParameterVector theta = random_parameters(c, 4);
        Eigen::VectorXd x(1);
        x << 0.4;
        const Matrix full = oracle::circuit_dense(c, theta) * oracle::encoding_dense(c.encoding, x);
        Vector psi = Vector::Zero(4);
        psi(0) = 1.0;
        psi = full * psi;
        const ObservableSet obs = ObservableSet::first_qubits_z(2, 2);
        const Eigen::VectorXd out = forward(c, theta, x, obs);
        for (int q = 0; q < 2; ++q) {
            const Complex dense =
                psi.dot(PauliString::single(2, q + 1, Pauli::Z).to_dense() * psi);
            REQUIRE(out(q) == Approx(dense.real()).margin(1e-10));
        }
    }

    SECTION("wrong parameter length is rejected") {
        const Circuit c = make_circuit(2, 1, EncodingKind::ry_rz, 3, 1.0);
        Eigen::VectorXd x(1);
        x << 0.0;
        REQUIRE_THROWS_AS(forward(c, ParameterVector::Zero(5), x,
                                  ObservableSet::first_qubits_z(2, 1)),
                          std::invalid_argument);
    }
}

TEST_CASE("forward reduces to measuring the encoded state") {
    Circuit c = make_circuit(2, 1, EncodingKind::ry_only, 1, 0.0);
    const ParameterVector theta = ParameterVector::Zero(c.num_parameters());
    Eigen::VectorXd x(1);
    x << 0.6;
    const Eigen::VectorXd out = forward(c, theta, x, ObservableSet::first_qubits_z(2, 1));
    REQUIRE(out(0) == Approx(0.8).margin(1e-12));
}

TEST_CASE("insert_shifted") {
    const Circuit c = make_circuit(2, 2, EncodingKind::ry_rz, 5, 10.0);
    const ParameterVector theta = random_parameters(c, 6);

    SECTION("shift up then down restores theta") {
        const ParameterVector back =
            insert_shifted(c, insert_shifted(c, theta, 3, M_PI / 2), 3, -M_PI / 2);
        REQUIRE((back - theta).cwiseAbs().maxCoeff() < 1e-15);
    }

    SECTION("other coordinates are bitwise unchanged") {
        const int last = c.num_parameters() - 1;
        const ParameterVector shifted = insert_shifted(c, theta, last, M_PI / 2);
        for (int i = 0; i < last; ++i) REQUIRE(shifted(i) == theta(i));
    }

    SECTION("out-of-range index is rejected") {
        REQUIRE_THROWS_AS(insert_shifted(c, theta, -1, M_PI / 2), std::out_of_range);
        REQUIRE_THROWS_AS(insert_shifted(c, theta, c.num_parameters(), M_PI / 2),
                          std::out_of_range);
    }

    SECTION("shift rule on a 1-qubit circuit reproduces -sin(theta)") {
        Circuit one = make_circuit(1, 1, EncodingKind::ry_only, 1, 0.0);
        ParameterVector t = ParameterVector::Zero(3);
        t(0) = 0.3;  // R^X(0.3) on |0>, so <Z> = cos(0.3)
        const ObservableSet obs = ObservableSet::first_qubits_z(1, 1);
        Eigen::VectorXd x(1);
        x << 0.0;
        const double plus = forward(one, insert_shifted(one, t, 0, M_PI / 2), x, obs)(0);
        const double minus = forward(one, insert_shifted(one, t, 0, -M_PI / 2), x, obs)(0);
        REQUIRE((plus - minus) / 2.0 == Approx(-std::sin(0.3)).margin(1e-9));
    }

    SECTION("angle addition equals literal gate insertion at oracle scale") {
        // Insert the extra pi/2 X rotation right after the first-slot gate of
        // qubit 1, layer 1, as a dense product, and compare outputs.
        const Circuit small = make_circuit(2, 1, EncodingKind::ry_rz, 5, 10.0);
        const ParameterVector base = random_parameters(small, 9);
        Eigen::VectorXd x(1);
        x << -0.2;
        Matrix u = oracle::encoding_dense(small.encoding, x);
        u = small.evolution.unitary * u;
        u = oracle::embed(oracle::rotation_2x2(Pauli::X, base(param_index(small, 1, 1, 0))), 2, 1) * u;
        u = oracle::embed(oracle::rotation_2x2(Pauli::X, M_PI / 2), 2, 1) * u;  // inserted gate
        u = oracle::embed(oracle::rotation_2x2(Pauli::Z, base(param_index(small, 1, 1, 1))), 2, 1) * u;
        u = oracle::embed(oracle::rotation_2x2(Pauli::X, base(param_index(small, 1, 1, 2))), 2, 1) * u;
        for (int slot = 0; slot < 3; ++slot)
            u = oracle::embed(oracle::rotation_2x2(rotation_axis(slot),
                                                   base(param_index(small, 1, 2, slot))),
                              2, 2) * u;
        Vector psi = Vector::Zero(4);
        psi(0) = 1.0;
        psi = u * psi;
        const double inserted =
            psi.dot(PauliString::single(2, 1, Pauli::Z).to_dense() * psi).real();
        const double shifted = forward(small, insert_shifted(small, base, 0, M_PI / 2), x,
                                       ObservableSet::first_qubits_z(2, 1))(0);
        REQUIRE(shifted == Approx(inserted).margin(1e-10));
    }
}

TEST_CASE("whole-circuit unitarity at oracle scale") {
    const Circuit c = make_circuit(3, 2, EncodingKind::ry_rz, 7, 10.0);
    const ParameterVector theta = random_parameters(c, 8);
    const Matrix u = oracle::circuit_dense(c, theta);
    REQUIRE(unitarity_defect(u) < 1e-10);
    // orthonormal inputs stay orthonormal
    Vector e0 = Vector::Zero(8), e5 = Vector::Zero(8);
    e0(0) = 1.0;
    e5(5) = 1.0;
    REQUIRE(std::abs((u * e0).dot(u * e5)) < 1e-10);
}
