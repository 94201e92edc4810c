#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qhash/bias.hpp"
#include "qhash/keyset.hpp"
#include "qhash/state.hpp"

namespace qhash {

/// Public parameters of h_K: the key set, the message bit length n and the qubit count
/// s = ceil(log2 d) + 1 (index register plus one target qubit).
class HashParams {
public:
    /// n = number of bits needed for residues of N (so 2^n = N when N is a power of two).
    explicit HashParams(KeySet keyset) : keyset_(std::move(keyset)) {
        message_bits_ = static_cast<int>(std::bit_width(keyset_.modulus() - 1));
        index_qubits_ = static_cast<int>(std::bit_width(keyset_.size() - 1));
        if (qubits() > kMaxQubits) throw std::invalid_argument("key set too large to simulate");
    }

    /// Requires N = 2^bit_length.
    static HashParams with_bit_length(KeySet keyset, int bit_length) {
        if (bit_length < 1 || bit_length > 62 || keyset.modulus() != (std::uint64_t{1} << bit_length))
            throw std::invalid_argument("modulus must equal 2^n");
        return HashParams(std::move(keyset));
    }

    [[nodiscard]] const KeySet& keyset() const noexcept { return keyset_; }
    [[nodiscard]] std::uint64_t modulus() const noexcept { return keyset_.modulus(); }
    [[nodiscard]] std::size_t d() const noexcept { return keyset_.size(); }
    [[nodiscard]] int message_bits() const noexcept { return message_bits_; }
    [[nodiscard]] int index_qubits() const noexcept { return index_qubits_; }
    [[nodiscard]] int qubits() const noexcept { return index_qubits_ + 1; }

private:
    KeySet keyset_;
    int message_bits_ = 0;
    int index_qubits_ = 0;
};

struct Hadamard {
    int target = 0;
};

/// Exact uniform superposition over the first `branches` values of a register.
struct UniformPrep {
    int first_qubit = 0;
    int qubit_count = 0;
    std::uint64_t branches = 1;
};

/// R_y(theta) on `target`, conditioned on the index register reading `index_value`,
/// emitted because message bit `message_bit` (1-based) is set.
struct ControlledRotation {
    int message_bit = 0;
    std::uint64_t index_value = 0;
    int target = 0;
    double theta = 0;
};

using Gate = std::variant<Hadamard, UniformPrep, ControlledRotation>;

struct CircuitDescription {
    int qubit_count = 0;
    std::vector<Gate> gates;
};

/// Analytic hash: amplitude (1/sqrt d) cos(2 pi k_i M / N) at index 2i and the sine at 2i + 1.
template <typename Scalar = double>
StateVector<Scalar> hash_state(const HashParams& params, std::uint64_t message) {
    const auto n = params.modulus();
    if (message >= n) throw std::invalid_argument("message must lie in [0, N)");
    using Amplitudes = typename StateVector<Scalar>::Amplitudes;
    Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << params.qubits());
    const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(params.d()));
    const auto& keys = params.keyset().keys();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto r = detail::mulmod(keys[i], message, n);
        const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * static_cast<Scalar>(r) /
                             static_cast<Scalar>(n);
        a(static_cast<Eigen::Index>(2 * i)) = scale * std::cos(angle);
        a(static_cast<Eigen::Index>(2 * i + 1)) = scale * std::sin(angle);
    }
    return StateVector<Scalar>::from_amplitudes(std::move(a));
}

/// LSB-first bits: bits[j - 1] carries weight 2^(j - 1).
std::vector<std::uint8_t> message_to_bits(const HashParams& params, std::uint64_t message);
std::uint64_t bits_to_message(std::span<const std::uint8_t> bits);

/// theta_{i,j} = 4 pi k_i 2^(j-1) / N, reduced into [0, 4 pi).
double rotation_angle(std::uint64_t key, int message_bit, std::uint64_t modulus);

CircuitDescription build_hash_circuit(const HashParams& params, std::span<const std::uint8_t> message_bits);
inline CircuitDescription build_hash_circuit(const HashParams& params, std::uint64_t message) {
    return build_hash_circuit(params, message_to_bits(params, message));
}

namespace detail {

void validate_circuit(const CircuitDescription& circuit);

template <typename Amplitudes>
void apply_gate(Amplitudes& a, const Gate& gate, bool inverse) {
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Hadamard>) {
                kernels::hadamard(a, g.target);
            } else if constexpr (std::is_same_v<G, UniformPrep>) {
                kernels::uniform_prep(a, g.first_qubit, g.qubit_count, g.branches);
            } else {
                kernels::controlled_ry(a, g.target, g.index_value, inverse ? -g.theta : g.theta);
            }
        },
        gate);
}

}  // namespace detail

/// Applies the circuit to `state` (or its exact inverse: gates reversed, rotations negated).
template <typename Scalar>
StateVector<Scalar> apply_circuit(const CircuitDescription& circuit, const StateVector<Scalar>& state,
                                  bool inverse = false) {
    detail::validate_circuit(circuit);
    if (state.num_qubits() != circuit.qubit_count)
        throw std::invalid_argument("dimension mismatch between circuit and state");
    return state.transformed([&](auto& a) {
        if (inverse) {
            for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it)
                detail::apply_gate(a, *it, true);
        } else {
            for (const auto& g : circuit.gates) detail::apply_gate(a, g, false);
        }
    });
}

/// Runs the circuit on |0...0>.
template <typename Scalar = double>
StateVector<Scalar> simulate_circuit(const CircuitDescription& circuit) {
    detail::validate_circuit(circuit);
    return apply_circuit(circuit, StateVector<Scalar>::basis(circuit.qubit_count));
}

struct ReverseTestResult {
    bool accepted = false;
    MeasurementRecord record;
};

/// Uncomputes the hash of the claimed message `claimed` from `psi` and measures;
/// accepts iff the all-zero outcome is observed.
template <typename Scalar>
ReverseTestResult reverse_test(const HashParams& params, std::uint64_t claimed, const StateVector<Scalar>& psi,
                               CounterRng& rng) {
    if (psi.num_qubits() != params.qubits())
        throw std::invalid_argument("dimension mismatch: state does not match hash parameters");
    const auto circuit = build_hash_circuit(params, claimed);
    const auto uncomputed = apply_circuit(circuit, psi, true);
    const auto record = measure_all(uncomputed, rng);
    return {record.outcome == 0, record};
}

/// |<h_K(claimed)|h_K(actual)>|^2.
inline double reverse_test_accept_probability(const HashParams& params, std::uint64_t claimed,
                                              std::uint64_t actual) {
    const double ip = hash_inner_product<double>(params.keyset(), claimed, actual);
    return ip * ip;
}

/// Text dump: `qubits <s>` then one gate per line (`H <q>`, `PREP <first> <count> <branches>`,
/// `CRY <index-value> <target> <theta>`).
std::string format_circuit(const CircuitDescription& circuit);

}  // namespace qhash
