#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qhash/random.hpp"
#include "qhash/state.hpp"

namespace qhash {

using BitVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using BitMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Binary linear code E : {0,1}^n -> {0,1}^m given by an m x n generator over GF(2).
class LinearCode {
public:
    explicit LinearCode(BitMatrix generator);

    [[nodiscard]] int n() const noexcept { return static_cast<int>(generator_.cols()); }
    [[nodiscard]] int m() const noexcept { return static_cast<int>(generator_.rows()); }
    [[nodiscard]] const BitMatrix& generator() const noexcept { return generator_; }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

private:
    BitMatrix generator_;
};

/// Largest n for which exhaustive enumeration of messages is attempted.
inline constexpr int kMaxEnumerableBits = 20;

LinearCode random_linear_code(int n, int m, CounterRng& rng);

BitVector encode(const LinearCode& code, const BitVector& message);

/// Minimum weight of E(u) over u != 0, or nullopt when n exceeds kMaxEnumerableBits.
std::optional<int> min_distance(const LinearCode& code);

/// (1/sqrt m) sum_{i<m} (-1)^{E_i(u)} |i>, on max(1, ceil(log2 m)) qubits.
State fingerprint_state(const LinearCode& code, const BitVector& message);

/// (m - 2 Hamming(E(u), E(v))) / m.
double fingerprint_inner_product(const LinearCode& code, const BitVector& u, const BitVector& v);

/// max over u != v of |<f(u)|f(v)>|, computed through codeword weights. Throws
/// std::domain_error when n exceeds kMaxEnumerableBits.
double fingerprint_resistance(const LinearCode& code);

/// Undoes the fingerprint of `claimed` (sign flips, then the inverse superposition) and
/// measures; accepts on the all-zero outcome.
struct FingerprintReverseResult {
    bool accepted = false;
    MeasurementRecord record;
};
FingerprintReverseResult fingerprint_reverse_test(const LinearCode& code, const BitVector& claimed, const State& psi,
                                                  CounterRng& rng);

/// Bits from a string of '0'/'1', character i becoming bit i.
BitVector parse_bits(const std::string& text);
std::string format_bits(const BitVector& bits);
/// Bit i of `value`, for i < n.
BitVector bits_of(std::uint64_t value, int n);

// Code file: `n <n>`, `m <m>`, then m generator rows of n '0'/'1' characters.
LinearCode parse_code(std::istream& in);
LinearCode load_code(const std::string& path);
std::string format_code(const LinearCode& code);
void save_code(const LinearCode& code, const std::string& path);

}  // namespace qhash
