#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qhash/keyset.hpp"

namespace qhash {

/// Character-sum statistics of a key set.
///
/// `delta` is max over l != 0 of |Re f_K(l)| / d, `lambda` the same with |f_K(l)|.
/// Worst shifts are the smallest l attaining each maximum.
template <typename Scalar = double>
struct BiasProfile {
    std::uint64_t modulus = 0;
    std::size_t d = 0;
    Scalar delta = 0;
    Scalar lambda = 0;
    std::uint64_t worst_shift_delta = 0;
    std::uint64_t worst_shift_lambda = 0;
};

enum class ShiftScan {
    Half,  ///< l in [1, N/2]; sufficient because |f_K(l)| = |f_K(N - l)|
    Full,  ///< l in [1, N - 1]
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % n);
}

/// exp(2 pi i r / N) for a residue r already reduced mod N.
template <typename Scalar>
std::complex<Scalar> unit_root(std::uint64_t r, std::uint64_t modulus) {
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * static_cast<Scalar>(r) /
                         static_cast<Scalar>(modulus);
    return {std::cos(angle), std::sin(angle)};
}

/// Table of exp(2 pi i r / N) for r in [0, N). The upper half mirrors the lower
/// half exactly, so sums at l and N - l use identical cosines.
template <typename Scalar>
std::vector<std::complex<Scalar>> unit_root_table(std::uint64_t modulus) {
    std::vector<std::complex<Scalar>> table(modulus);
    for (std::uint64_t r = 0; r <= modulus / 2; ++r) {
        table[r] = unit_root<Scalar>(r, modulus);
        if (r != 0) table[modulus - r] = std::conj(table[r]);
    }
    return table;
}

template <typename Scalar>
constexpr Scalar tie_tolerance() {
    return Scalar(1e-12);
}

}  // namespace detail

/// f_K(l) = sum over k in K of exp(2 pi i k l / N), repeats counted.
template <typename Scalar = double>
std::complex<Scalar> fourier_component(const KeySet& keyset, std::uint64_t shift) {
    const auto n = keyset.modulus();
    if (shift >= n) throw std::invalid_argument("shift must lie in [0, N)");
    std::complex<Scalar> sum{0, 0};
    for (auto k : keyset.keys()) sum += detail::unit_root<Scalar>(detail::mulmod(k, shift, n), n);
    return sum;
}

template <typename Scalar = double>
BiasProfile<Scalar> bias_profile(const KeySet& keyset, ShiftScan scan = ShiftScan::Half) {
    const auto n = keyset.modulus();
    const auto table = detail::unit_root_table<Scalar>(n);
    const auto d = static_cast<Scalar>(keyset.size());
    const std::uint64_t last = scan == ShiftScan::Half ? n / 2 : n - 1;

    BiasProfile<Scalar> profile;
    profile.modulus = n;
    profile.d = keyset.size();
    profile.worst_shift_delta = 1;
    profile.worst_shift_lambda = 1;
    Scalar best_real = -1;
    Scalar best_abs = -1;
    for (std::uint64_t l = 1; l <= last; ++l) {
        std::complex<Scalar> sum{0, 0};
        for (auto k : keyset.keys()) sum += table[detail::mulmod(k, l, n)];
        const Scalar re = std::abs(sum.real());
        const Scalar mag = std::abs(sum);
        // A later shift only wins if it is larger beyond rounding noise.
        if (re > best_real + detail::tie_tolerance<Scalar>() * d) {
            best_real = re;
            profile.worst_shift_delta = l;
        }
        if (mag > best_abs + detail::tie_tolerance<Scalar>() * d) {
            best_abs = mag;
            profile.worst_shift_lambda = l;
        }
    }
    profile.delta = best_real / d;
    profile.lambda = best_abs / d;
    return profile;
}

/// <h_K(M1)|h_K(M2)> = (1/d) sum_i cos(2 pi k_i (M1 - M2) / N).
template <typename Scalar = double>
Scalar hash_inner_product(const KeySet& keyset, std::uint64_t m1, std::uint64_t m2) {
    const auto n = keyset.modulus();
    if (m1 >= n || m2 >= n) throw std::invalid_argument("messages must lie in [0, N)");
    const std::uint64_t diff = (m1 + n - m2) % n;
    return fourier_component<Scalar>(keyset, diff).real() / static_cast<Scalar>(keyset.size());
}

/// Re f_K(l) / d for every l in [0, N); index with (M1 - M2) mod N.
template <typename Scalar = double>
std::vector<Scalar> inner_product_by_difference(const KeySet& keyset) {
    const auto n = keyset.modulus();
    const auto table = detail::unit_root_table<Scalar>(n);
    std::vector<Scalar> out(n);
    for (std::uint64_t l = 0; l < n; ++l) {
        Scalar sum = 0;
        for (auto k : keyset.keys()) sum += table[detail::mulmod(k, l, n)].real();
        out[l] = sum / static_cast<Scalar>(keyset.size());
    }
    return out;
}

}  // namespace qhash
