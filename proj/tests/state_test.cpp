#include "qhash/state.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"

using namespace qhash;

namespace {

State random_state(int qubits, CounterRng& rng) {
    State::Amplitudes a(Eigen::Index{1} << qubits);
    for (auto& z : a) z = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    a.normalize();
    return State::from_amplitudes(a);
}

State plus_state() {
    State::Amplitudes a(2);
    a << std::sqrt(0.5), std::sqrt(0.5);
    return State::from_amplitudes(a);
}

}  // namespace

TEST(StateVector, construction_checks) {
    EXPECT_THROW(State::basis(0), std::invalid_argument);
    EXPECT_THROW(State::basis(kMaxQubits + 1), std::invalid_argument);
    EXPECT_THROW(State::basis(2, 4), std::invalid_argument);
    State::Amplitudes bad(3);
    bad << 1, 0, 0;
    EXPECT_THROW(State::from_amplitudes(bad), std::invalid_argument);
    State::Amplitudes unnormalized(2);
    unnormalized << 1, 1;
    EXPECT_THROW(State::from_amplitudes(unnormalized), std::invalid_argument);
    EXPECT_EQ(State::basis(3, 5).dimension(), 8);
}

TEST(InnerProduct, basis_and_self) {
    CounterRng rng(1);
    const auto psi = random_state(4, rng);
    EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(State::basis(1, 0), State::basis(1, 1))), 0.0, 1e-15);
    EXPECT_THROW(inner_product(State::basis(1), State::basis(2)), std::invalid_argument);
}

TEST(InnerProduct, conjugate_symmetry_and_bound) {
    CounterRng rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_state(3, rng);
        const auto b = random_state(3, rng);
        const auto ab = inner_product(a, b);
        const auto ba = inner_product(b, a);
        EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-12);
        EXPECT_LE(std::abs(ab), 1.0 + 1e-10);
    }
}

TEST(MeasureAll, basis_state_is_certain) {
    CounterRng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto r = measure_all(State::basis(4, 11), rng);
        EXPECT_EQ(r.outcome, 11u);
        EXPECT_DOUBLE_EQ(r.probability, 1.0);
    }
}

TEST(MeasureAll, born_statistics) {
    CounterRng rng(4);
    const auto plus = plus_state();
    const int shots = 10000;
    int zeros = 0;
    for (int s = 0; s < shots; ++s) {
        const auto r = measure_all(plus, rng);
        zeros += r.outcome == 0;
        EXPECT_NEAR(r.probability, 0.5, 1e-12);
    }
    EXPECT_NEAR(zeros / double(shots), 0.5, 3 * std::sqrt(0.25 / shots));
}

TEST(MeasureAll, reproducible_sequence) {
    CounterRng a(99), b(99);
    CounterRng gen(5);
    const auto psi = random_state(5, gen);
    for (int s = 0; s < 100; ++s) EXPECT_EQ(measure_all(psi, a).outcome, measure_all(psi, b).outcome);
}

TEST(SwapTest, accept_probability) {
    CounterRng rng(6);
    const auto psi = random_state(3, rng);
    EXPECT_NEAR(swap_test_accept_probability(psi, psi), 1.0, 1e-12);
    EXPECT_NEAR(swap_test_accept_probability(State::basis(2, 0), State::basis(2, 3)), 0.5, 1e-15);
    // delta-orthogonal pair: |ip| = 0.3 -> accept below (1 + 0.3^2)/2 + tiny
    State::Amplitudes a(2), b(2);
    a << 1, 0;
    b << 0.3, std::sqrt(1 - 0.09);
    EXPECT_NEAR(swap_test_accept_probability(State::from_amplitudes(a), State::from_amplitudes(b)), 0.545, 1e-12);
}

TEST(SwapTest, matches_full_circuit_reference) {
    CounterRng rng(7);
    for (int s = 1; s <= 4; ++s) {
        for (int t = 0; t < 5; ++t) {
            const auto a = random_state(s, rng);
            const auto b = random_state(s, rng);
            EXPECT_NEAR(swap_test_accept_probability(a, b), oracle::full_circuit_swap_accept(a, b), 1e-12);
        }
    }
}

TEST(SwapTest, sampled_statistics) {
    CounterRng rng(8);
    const auto same = random_state(3, rng);
    const auto counts_same = swap_test(same, same, 10000, rng);
    EXPECT_EQ(counts_same.accepted, 10000u);

    const auto orth = swap_test(State::basis(3, 1), State::basis(3, 6), 10000, rng);
    EXPECT_NEAR(orth.accept_rate(), 0.5, 0.015);

    const auto a = random_state(3, rng);
    const auto b = random_state(3, rng);
    const double p = swap_test_accept_probability(a, b);
    const auto counts = swap_test(a, b, 10000, rng);
    EXPECT_NEAR(counts.accept_rate(), p, 3 * std::sqrt(p * (1 - p) / 10000));
    EXPECT_THROW(swap_test(a, b, 0, rng), std::invalid_argument);
    EXPECT_THROW(swap_test(a, State::basis(2), 10, rng), std::invalid_argument);
}

TEST(SwapTest, same_seed_same_counts) {
    CounterRng gen(10);
    const auto a = random_state(2, gen);
    const auto b = random_state(2, gen);
    CounterRng r1(42), r2(42);
    EXPECT_EQ(swap_test(a, b, 5000, r1).accepted, swap_test(a, b, 5000, r2).accepted);
}

TEST(RepeatedTest, powers) {
    EXPECT_DOUBLE_EQ(repeated_test(1.0, 17), 1.0);
    EXPECT_DOUBLE_EQ(repeated_test(0.37, 1), 0.37);
    // delta = 0.9: single-shot accept (1 + 0.81)/2, 44 repetitions fall below 1/80.
    EXPECT_LE(repeated_test(0.905, 44), 0.0125);
    EXPECT_GT(repeated_test(0.905, 43), 0.0125);
    EXPECT_THROW(repeated_test(1.2, 3), std::invalid_argument);
    EXPECT_THROW(repeated_test(0.5, 0), std::invalid_argument);
}

TEST(Kernels, rotation_then_inverse_is_identity) {
    CounterRng rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto psi = random_state(4, rng);
        const int target = static_cast<int>(rng.below(4));
        const auto control = rng.below(8);
        const double theta = 4 * std::numbers::pi * rng.uniform();
        const auto there = psi.transformed([&](auto& a) { kernels::controlled_ry(a, target, control, theta); });
        EXPECT_NEAR(there.amplitudes().norm(), 1.0, 1e-10);
        const auto back = there.transformed([&](auto& a) { kernels::controlled_ry(a, target, control, -theta); });
        EXPECT_LT((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Kernels, uniform_prep_is_unitary_and_self_inverse) {
    CounterRng rng(12);
    for (std::uint64_t branches = 1; branches <= 8; ++branches) {
        const auto prepared = State::basis(4).transformed([&](auto& a) { kernels::uniform_prep(a, 1, 3, branches); });
        for (std::uint64_t r = 0; r < 8; ++r) {
            const double expect = r < branches ? 1 / std::sqrt(double(branches)) : 0.0;
            EXPECT_NEAR(prepared[static_cast<Eigen::Index>(r << 1)].real(), expect, 1e-12);
            EXPECT_NEAR(std::abs(prepared[static_cast<Eigen::Index>((r << 1) | 1)]), 0.0, 1e-12);
        }
        const auto psi = random_state(4, rng);
        const auto once = psi.transformed([&](auto& a) { kernels::uniform_prep(a, 1, 3, branches); });
        EXPECT_NEAR(once.amplitudes().norm(), 1.0, 1e-10);
        const auto twice = once.transformed([&](auto& a) { kernels::uniform_prep(a, 1, 3, branches); });
        EXPECT_LT((twice.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Kernels, hadamard_preserves_norm) {
    CounterRng rng(13);
    auto psi = random_state(5, rng);
    for (int q = 0; q < 5; ++q) psi = psi.transformed([&](auto& a) { kernels::hadamard(a, q); });
    EXPECT_NEAR(psi.amplitudes().norm(), 1.0, 1e-10);
}

TEST(CounterRng, split_streams_are_independent_of_parent_progress) {
    CounterRng a(3);
    const auto child_before = a.split(7);
    (void)a();
    (void)a();
    const auto child_after = a.split(7);
    auto x = child_before;
    auto y = child_after;
    EXPECT_EQ(x(), y());
    EXPECT_NE(a.split(1)(), a.split(2)());
    for (int i = 0; i < 1000; ++i) EXPECT_LT(a.below(37), 37u);
}
