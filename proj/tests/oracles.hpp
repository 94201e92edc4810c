#pragma once

// Independent reference computations used only by the tests. None of these share
// code paths with the library routines they check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qhash/fingerprint.hpp"
#include "qhash/keyset.hpp"
#include "qhash/state.hpp"

namespace qhash::oracle {

struct BruteBias {
    double delta = 0;
    double lambda = 0;
};

/// Full O(N d) double loop in long double with unreduced angles.
inline BruteBias brute_force_bias(const KeySet& ks) {
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    const auto n = static_cast<long double>(ks.modulus());
    BruteBias out;
    for (std::uint64_t l = 1; l < ks.modulus(); ++l) {
        long double re = 0, im = 0;
        for (auto k : ks.keys()) {
            const long double angle = two_pi * static_cast<long double>(k) * static_cast<long double>(l) / n;
            re += std::cos(angle);
            im += std::sin(angle);
        }
        out.delta = std::max(out.delta, static_cast<double>(std::fabs(re)));
        out.lambda = std::max(out.lambda, static_cast<double>(std::sqrt(re * re + im * im)));
    }
    out.delta /= static_cast<double>(ks.size());
    out.lambda /= static_cast<double>(ks.size());
    return out;
}

/// Direct evaluation of the two-state cos*cos + sin*sin sum.
inline double brute_hash_overlap(const KeySet& ks, std::uint64_t m1, std::uint64_t m2) {
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    const auto n = static_cast<long double>(ks.modulus());
    long double sum = 0;
    for (auto k : ks.keys()) {
        const long double a = two_pi * k * m1 / n;
        const long double b = two_pi * k * m2 / n;
        sum += std::cos(a) * std::cos(b) + std::sin(a) * std::sin(b);
    }
    return static_cast<double>(sum / ks.size());
}

/// Materialises ancilla (qubit 0) + psi (qubits 1..s) + phi (qubits s+1..2s), applies
/// H, controlled-SWAP and H, and returns the probability that the ancilla reads 0.
inline double full_circuit_swap_accept(const State& psi, const State& phi) {
    const int s = psi.num_qubits();
    const std::size_t dim = std::size_t{1} << s;
    std::vector<std::complex<double>> v(2 * dim * dim);
    auto idx = [&](std::size_t anc, std::size_t a, std::size_t b) { return anc | (a << 1) | (b << (s + 1)); };
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) v[idx(0, a, b)] = psi[a] * phi[b];
    const double h = 1 / std::sqrt(2.0);
    auto hadamard0 = [&] {
        for (std::size_t i = 0; i < v.size(); i += 2) {
            const auto x = v[i], y = v[i + 1];
            v[i] = h * (x + y);
            v[i + 1] = h * (x - y);
        }
    };
    hadamard0();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) std::swap(v[idx(1, a, b)], v[idx(1, b, a)]);
    hadamard0();
    double p0 = 0;
    for (std::size_t i = 0; i < v.size(); i += 2) p0 += std::norm(v[i]);
    return p0;
}

/// max over all ordered pairs u != v of |<f(u)|f(v)>| from explicit sign counting.
inline double pairwise_fingerprint_resistance(const LinearCode& code) {
    const int n = code.n();
    const int m = code.m();
    std::vector<std::vector<int>> words;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        std::vector<int> w(m, 0);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) w[r] ^= (code.generator()(r, c) & ((u >> c) & 1U));
        words.push_back(std::move(w));
    }
    double worst = 0;
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            int agree = 0;
            for (int r = 0; r < m; ++r) agree += words[a][r] == words[b][r] ? 1 : -1;
            worst = std::max(worst, std::abs(static_cast<double>(agree)) / m);
        }
    }
    return worst;
}

}  // namespace qhash::oracle
