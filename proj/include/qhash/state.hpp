#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qhash/random.hpp"

namespace qhash {

inline constexpr int kMaxQubits = 24;

/// Dense pure state on `num_qubits` qubits. Basis index bit q is qubit q.
template <typename Scalar = double>
class StateVector {
public:
    using Complex = std::complex<Scalar>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    /// |index> on `qubits` qubits.
    static StateVector basis(int qubits, std::uint64_t index = 0) {
        check_qubits(qubits);
        Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << qubits);
        if (index >= static_cast<std::uint64_t>(a.size()))
            throw std::invalid_argument("basis index out of range");
        a(static_cast<Eigen::Index>(index)) = Complex(1);
        return StateVector(qubits, std::move(a));
    }

    /// Validates dimension (a power of two) and unit norm to `tolerance`.
    static StateVector from_amplitudes(Amplitudes a, Scalar tolerance = Scalar(1e-10)) {
        const auto dim = a.size();
        if (dim < 2 || (dim & (dim - 1)) != 0)
            throw std::invalid_argument("state dimension must be a power of two, got " + std::to_string(dim));
        int qubits = 0;
        while ((Eigen::Index{1} << qubits) < dim) ++qubits;
        check_qubits(qubits);
        if (std::abs(a.squaredNorm() - Scalar(1)) > tolerance)
            throw std::invalid_argument("state is not normalized");
        return StateVector(qubits, std::move(a));
    }

    [[nodiscard]] int num_qubits() const noexcept { return qubits_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex operator[](Eigen::Index i) const { return amplitudes_(i); }
    [[nodiscard]] Scalar probability(Eigen::Index i) const { return std::norm(amplitudes_(i)); }

    /// Applies `op` to a copy of the amplitudes. Callers guarantee `op` is unitary.
    template <typename Op>
    [[nodiscard]] StateVector transformed(Op&& op) const {
        Amplitudes copy = amplitudes_;
        op(copy);
        return StateVector(qubits_, std::move(copy));
    }

private:
    StateVector(int qubits, Amplitudes a) : qubits_(qubits), amplitudes_(std::move(a)) {}

    static void check_qubits(int qubits) {
        if (qubits < 1 || qubits > kMaxQubits)
            throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }

    int qubits_;
    Amplitudes amplitudes_;
};

using State = StateVector<double>;

struct MeasurementRecord {
    std::uint64_t outcome = 0;
    double probability = 0;
};

struct SwapTestCounts {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    [[nodiscard]] double accept_rate() const {
        return static_cast<double>(accepted) / static_cast<double>(accepted + rejected);
    }
};

namespace detail {

template <typename Scalar>
void require_same_shape(const StateVector<Scalar>& a, const StateVector<Scalar>& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + " qubits");
}

/// Root of a fresh family of per-item streams; advances `rng` once.
inline CounterRng stream_root(CounterRng& rng) { return rng.split(rng()); }

}  // namespace detail

/// <psi|phi>, conjugate-linear in the first argument.
template <typename Scalar>
std::complex<Scalar> inner_product(const StateVector<Scalar>& psi, const StateVector<Scalar>& phi) {
    detail::require_same_shape(psi, phi);
    return psi.amplitudes().dot(phi.amplitudes());
}

/// Samples a computational-basis outcome by the Born rule.
template <typename Scalar>
MeasurementRecord measure_all(const StateVector<Scalar>& psi, CounterRng& rng) {
    const double u = rng.uniform();
    double cumulative = 0;
    std::uint64_t last_nonzero = 0;
    for (Eigen::Index i = 0; i < psi.dimension(); ++i) {
        const double p = static_cast<double>(psi.probability(i));
        if (p == 0) continue;
        last_nonzero = static_cast<std::uint64_t>(i);
        cumulative += p;
        if (u < cumulative) return {static_cast<std::uint64_t>(i), p};
    }
    // u landed in the rounding gap above the accumulated mass.
    return {last_nonzero, static_cast<double>(psi.probability(static_cast<Eigen::Index>(last_nonzero)))};
}

/// Probability that the SWAP-test ancilla reads 0: (1 + |<psi|phi>|^2) / 2.
template <typename Scalar>
Scalar swap_test_accept_probability(const StateVector<Scalar>& psi, const StateVector<Scalar>& phi) {
    const Scalar overlap = std::norm(inner_product(psi, phi));
    return std::clamp((Scalar(1) + overlap) / Scalar(2), Scalar(0.5), Scalar(1));
}

/// Shot-level SWAP-test. Each shot samples the ancilla from its own derived stream.
template <typename Scalar>
SwapTestCounts swap_test(const StateVector<Scalar>& psi, const StateVector<Scalar>& phi,
                         std::uint64_t shots, CounterRng& rng) {
    if (shots == 0) throw std::invalid_argument("shots must be positive");
    const double p = static_cast<double>(swap_test_accept_probability(psi, phi));
    const CounterRng root = detail::stream_root(rng);
    SwapTestCounts counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        auto shot_rng = root.split(shot);
        if (shot_rng.bernoulli(p))
            ++counts.accepted;
        else
            ++counts.rejected;
    }
    return counts;
}

/// Probability that k independent repetitions of a test all accept.
inline double repeated_test(double accept_probability, std::uint64_t repetitions) {
    if (!(accept_probability >= 0 && accept_probability <= 1))
        throw std::invalid_argument("probability must lie in [0, 1]");
    if (repetitions == 0) throw std::invalid_argument("repetitions must be positive");
    return std::pow(accept_probability, static_cast<double>(repetitions));
}

// Gate kernels. All act in place on a full amplitude vector.
namespace kernels {

template <typename Amplitudes>
void hadamard(Amplitudes& a, int target) {
    using Complex = typename Amplitudes::Scalar;
    using Real = typename Complex::value_type;
    const Real h = Real(1) / std::sqrt(Real(2));
    const Eigen::Index bit = Eigen::Index{1} << target;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (i & bit) continue;
        const Complex x = a(i);
        const Complex y = a(i | bit);
        a(i) = h * (x + y);
        a(i | bit) = h * (x - y);
    }
}

/// R_y(theta) on `target`, applied only where the remaining qubits read `control_value`
/// (the target bit removed and the higher bits shifted down).
template <typename Amplitudes>
void controlled_ry(Amplitudes& a, int target, std::uint64_t control_value, double theta) {
    using Complex = typename Amplitudes::Scalar;
    using Real = typename Complex::value_type;
    const std::uint64_t low_mask = (std::uint64_t{1} << target) - 1;
    const std::uint64_t base = ((control_value & ~low_mask) << 1) | (control_value & low_mask);
    const auto zero = static_cast<Eigen::Index>(base);
    const auto one = static_cast<Eigen::Index>(base | (std::uint64_t{1} << target));
    if (one >= a.size()) throw std::invalid_argument("rotation control value out of range");
    const Real c = static_cast<Real>(std::cos(theta / 2));
    const Real s = static_cast<Real>(std::sin(theta / 2));
    const Complex x = a(zero);
    const Complex y = a(one);
    a(zero) = c * x - s * y;
    a(one) = s * x + c * y;
}

/// Householder reflection on qubits [first, first + count) exchanging |0> and
/// (1/sqrt(branches)) sum_{r < branches} |r>. Self-inverse.
template <typename Amplitudes>
void uniform_prep(Amplitudes& a, int first, int count, std::uint64_t branches) {
    using Complex = typename Amplitudes::Scalar;
    using Real = typename Complex::value_type;
    const std::uint64_t reg_dim = std::uint64_t{1} << count;
    if (branches == 0 || branches > reg_dim) throw std::invalid_argument("branch count exceeds register");
    if (branches == 1) return;
    // w = (e0 - u) / |e0 - u|, |e0 - u|^2 = 2 - 2/sqrt(b).
    const Real inv_sqrt_b = Real(1) / std::sqrt(static_cast<Real>(branches));
    const Real norm = std::sqrt(Real(2) - Real(2) * inv_sqrt_b);
    const Real w0 = (Real(1) - inv_sqrt_b) / norm;
    const Real wr = -inv_sqrt_b / norm;

    const std::uint64_t low_mask = (std::uint64_t{1} << first) - 1;
    const std::uint64_t outer = static_cast<std::uint64_t>(a.size()) >> count;
    for (std::uint64_t rest = 0; rest < outer; ++rest) {
        const std::uint64_t offset = ((rest & ~low_mask) << count) | (rest & low_mask);
        auto index = [&](std::uint64_t r) { return static_cast<Eigen::Index>(offset | (r << first)); };
        Complex proj = w0 * a(index(0));
        for (std::uint64_t r = 1; r < branches; ++r) proj += wr * a(index(r));
        a(index(0)) -= Real(2) * w0 * proj;
        for (std::uint64_t r = 1; r < branches; ++r) a(index(r)) -= Real(2) * wr * proj;
    }
}

}  // namespace kernels

}  // namespace qhash
