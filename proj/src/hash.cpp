#include "qhash/hash.hpp"

#include <cstdio>

namespace qhash {

std::vector<std::uint8_t> message_to_bits(const HashParams& params, std::uint64_t message) {
    if (message >= params.modulus()) throw std::invalid_argument("message must lie in [0, N)");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(params.message_bits()));
    for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = static_cast<std::uint8_t>((message >> j) & 1U);
    return bits;
}

std::uint64_t bits_to_message(std::span<const std::uint8_t> bits) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] > 1) throw std::invalid_argument("message bits must be 0 or 1");
        m |= static_cast<std::uint64_t>(bits[j]) << j;
    }
    return m;
}

double rotation_angle(std::uint64_t key, int message_bit, std::uint64_t modulus) {
    if (message_bit < 1 || message_bit > 63) throw std::invalid_argument("message bit index out of range");
    const std::uint64_t weight = (std::uint64_t{1} << (message_bit - 1)) % modulus;
    const std::uint64_t r = detail::mulmod(key, weight, modulus);
    return 4.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(modulus);
}

CircuitDescription build_hash_circuit(const HashParams& params, std::span<const std::uint8_t> message_bits) {
    if (message_bits.size() != static_cast<std::size_t>(params.message_bits()))
        throw std::invalid_argument("expected " + std::to_string(params.message_bits()) + " message bits, got " +
                                    std::to_string(message_bits.size()));
    if (bits_to_message(message_bits) >= params.modulus())
        throw std::invalid_argument("message must lie in [0, N)");

    CircuitDescription circuit;
    circuit.qubit_count = params.qubits();
    const int index_qubits = params.index_qubits();
    const auto d = static_cast<std::uint64_t>(params.d());
    if (std::has_single_bit(d)) {
        for (int q = 1; q <= index_qubits; ++q) circuit.gates.emplace_back(Hadamard{q});
    } else {
        circuit.gates.emplace_back(UniformPrep{1, index_qubits, d});
    }

    const auto& keys = params.keyset().keys();
    for (std::size_t j = 1; j <= message_bits.size(); ++j) {
        if (!message_bits[j - 1]) continue;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            circuit.gates.emplace_back(ControlledRotation{static_cast<int>(j), static_cast<std::uint64_t>(i), 0,
                                                          rotation_angle(keys[i], static_cast<int>(j),
                                                                         params.modulus())});
        }
    }
    return circuit;
}

namespace detail {

void validate_circuit(const CircuitDescription& circuit) {
    const int s = circuit.qubit_count;
    if (s < 1 || s > kMaxQubits) throw std::invalid_argument("circuit qubit count out of range");
    for (const auto& gate : circuit.gates) {
        const bool ok = std::visit(
            [s](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, Hadamard>) {
                    return g.target >= 0 && g.target < s;
                } else if constexpr (std::is_same_v<G, UniformPrep>) {
                    return g.first_qubit >= 0 && g.qubit_count >= 0 && g.first_qubit + g.qubit_count <= s &&
                           g.branches >= 1 && g.branches <= (std::uint64_t{1} << g.qubit_count);
                } else {
                    return g.target >= 0 && g.target < s && g.index_value < (std::uint64_t{1} << (s - 1)) &&
                           std::isfinite(g.theta);
                }
            },
            gate);
        if (!ok) throw std::invalid_argument("malformed gate in circuit");
    }
}

}  // namespace detail

std::string format_circuit(const CircuitDescription& circuit) {
    std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
    char buf[96];
    for (const auto& gate : circuit.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, Hadamard>) {
                    std::snprintf(buf, sizeof buf, "H %d\n", g.target);
                } else if constexpr (std::is_same_v<G, UniformPrep>) {
                    std::snprintf(buf, sizeof buf, "PREP %d %d %llu\n", g.first_qubit, g.qubit_count,
                                  static_cast<unsigned long long>(g.branches));
                } else {
                    std::snprintf(buf, sizeof buf, "CRY %llu %d %.17g\n",
                                  static_cast<unsigned long long>(g.index_value), g.target, g.theta);
                }
            },
            gate);
        out += buf;
    }
    return out;
}

}  // namespace qhash
