#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Pauli : std::uint8_t { I, X, Y, Z };

inline char pauli_char(Pauli p) {
    switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    }
    return '?';
}

inline Pauli pauli_from_char(char c) {
    switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    const Complex i(0.0, 1.0);
    switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Tensor product of single-qubit letters. Qubit 1 is the leftmost letter and
// the most significant bit of the basis index (convention fixed project-wide).
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

    // Parse e.g. "ZII" or "XYZ".
    explicit PauliString(const std::string& s) {
        letters_.reserve(s.size());
        for (char c : s) letters_.push_back(pauli_from_char(c));
    }

    // Weight-1 string: `p` on 1-based qubit `qubit`, identity elsewhere.
    static PauliString single(int num_qubits, int qubit, Pauli p) {
        if (qubit < 1 || qubit > num_qubits)
            throw std::out_of_range("qubit index out of range");
        std::vector<Pauli> letters(static_cast<std::size_t>(num_qubits), Pauli::I);
        letters[static_cast<std::size_t>(qubit - 1)] = p;
        return PauliString(std::move(letters));
    }

    static PauliString identity(int num_qubits) {
        return PauliString(std::vector<Pauli>(static_cast<std::size_t>(num_qubits), Pauli::I));
    }

    int num_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int qubit) const { return letters_.at(static_cast<std::size_t>(qubit - 1)); }
    const std::vector<Pauli>& letters() const { return letters_; }

    int weight() const {
        int w = 0;
        for (Pauli p : letters_)
            if (p != Pauli::I) ++w;
        return w;
    }

    std::string str() const {
        std::string s;
        for (Pauli p : letters_) s += pauli_char(p);
        return s;
    }

    // Bitmask of qubits whose letter flips the computational basis (X or Y).
    // Bit (N - q) corresponds to qubit q.
    std::uint64_t flip_mask() const {
        std::uint64_t m = 0;
        const int n = num_qubits();
        for (int q = 1; q <= n; ++q) {
            Pauli p = letters_[static_cast<std::size_t>(q - 1)];
            if (p == Pauli::X || p == Pauli::Y) m |= (1ull << (n - q));
        }
        return m;
    }

    // Phase picked up applying the string to basis state |index>:
    // P|index> = phase(index) |index ^ flip_mask()>.
    Complex phase(std::uint64_t index) const {
        const int n = num_qubits();
        Complex ph(1.0, 0.0);
        for (int q = 1; q <= n; ++q) {
            const bool bit = (index >> (n - q)) & 1ull;
            switch (letters_[static_cast<std::size_t>(q - 1)]) {
            case Pauli::I:
            case Pauli::X:
                break;
            case Pauli::Y:
                ph *= bit ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
                break;
            case Pauli::Z:
                if (bit) ph = -ph;
                break;
            }
        }
        return ph;
    }

    // Dense 2^N x 2^N matrix via Kronecker products; oracle scale only.
    Matrix to_dense() const {
        Matrix m = Matrix::Identity(1, 1);
        for (Pauli p : letters_) {
            Matrix next(m.rows() * 2, m.cols() * 2);
            const Eigen::Matrix2cd blk = pauli_matrix(p);
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c)
                    next.block(r * 2, c * 2, 2, 2) = m(r, c) * blk;
            m = std::move(next);
        }
        return m;
    }

    bool operator==(const PauliString& other) const { return letters_ == other.letters_; }

  private:
    std::vector<Pauli> letters_;
};

// All 4^N Pauli strings in lexicographic (I,X,Y,Z) order; index is base-4
// with qubit 1 as the most significant digit.
inline std::vector<PauliString> all_pauli_strings(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 8)
        throw std::invalid_argument("all_pauli_strings: qubit count out of range");
    const std::size_t count = 1ull << (2 * num_qubits);
    std::vector<PauliString> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<Pauli> letters(static_cast<std::size_t>(num_qubits));
        std::size_t rem = idx;
        for (int q = num_qubits; q >= 1; --q) {
            letters[static_cast<std::size_t>(q - 1)] = static_cast<Pauli>(rem & 3u);
            rem >>= 2;
        }
        out.emplace_back(std::move(letters));
    }
    return out;
}

}  // namespace qcl
