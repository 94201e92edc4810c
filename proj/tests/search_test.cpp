#include "qhash/search.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qhash/bias.hpp"

using namespace qhash;

TEST(LemmaSize, formula) {
    EXPECT_EQ(lemma_size(1024, 0.5), 61u);  // ceil(8 ln 2048) = ceil(60.997)
    EXPECT_EQ(lemma_size(8, 0.99), 6u);     // ceil(2.0406 * ln 16) = ceil(5.658)
    EXPECT_GE(lemma_size(2, 0.999999), 3u); // approaches ceil(2 ln 4) = 3
    EXPECT_THROW(lemma_size(8, 0.0), std::invalid_argument);
    EXPECT_THROW(lemma_size(8, 1.0), std::invalid_argument);
    EXPECT_THROW(lemma_size(8, -0.1), std::invalid_argument);
}

TEST(LemmaSize, linear_in_bit_length) {
    // ln(2^(n+1)) = (n+1) ln 2, so consecutive sizes differ by about (2/eps^2) ln 2.
    const double step = 2.0 / (0.25 * 0.25) * std::log(2.0);
    for (int n = 4; n < 30; ++n) {
        const double diff = static_cast<double>(lemma_size(1ULL << (n + 1), 0.25)) -
                            static_cast<double>(lemma_size(1ULL << n, 0.25));
        EXPECT_NEAR(diff, step, 1.0) << n;
    }
}

TEST(SampleRandomKeyset, meets_target_at_lemma_size) {
    CounterRng rng(2024);
    const auto out = sample_random_keyset(1024, 0.5, kDefaultSampleAttempts, rng);
    EXPECT_TRUE(out.target_met);
    EXPECT_EQ(out.keyset.size(), 61u);
    EXPECT_LT(out.achieved_delta, 0.5);
    EXPECT_EQ(out.achieved_delta, bias_profile(out.keyset).delta);
    for (auto k : out.keyset.keys()) EXPECT_LT(k, 1024u);
}

TEST(SampleRandomKeyset, small_modulus_loose_target) {
    int met = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CounterRng rng(seed);
        const auto out = sample_random_keyset(8, 0.99, kDefaultSampleAttempts, rng);
        EXPECT_EQ(out.keyset.size(), 6u);
        EXPECT_NEAR(out.achieved_delta, oracle::brute_force_bias(out.keyset).delta, 1e-10);
        met += out.target_met;
    }
    EXPECT_GE(met, 18);
}

TEST(SampleRandomKeyset, deterministic_replay) {
    CounterRng a(77), b(77);
    const auto x = sample_random_keyset(4096, 0.3, 5, a);
    const auto y = sample_random_keyset(4096, 0.3, 5, b);
    EXPECT_EQ(x.keyset, y.keyset);
    EXPECT_EQ(x.achieved_delta, y.achieved_delta);
    EXPECT_EQ(x.generations_used, y.generations_used);
}

TEST(SampleRandomKeyset, exhausted_budget_reports_best) {
    CounterRng rng(1);
    // Four keys in Z_2 at epsilon 0.9: a single draw fails only when all keys agree.
    int exhausted = 0;
    for (int t = 0; t < 200; ++t) {
        const auto out = sample_random_keyset(2, 0.9, 1, rng);
        EXPECT_EQ(out.keyset.size(), lemma_size(2, 0.9));
        EXPECT_EQ(out.target_met, out.achieved_delta < 0.9);
        if (out.target_met) {
            EXPECT_EQ(out.generations_used, 1u);
        } else {
            EXPECT_EQ(out.generations_used, 1u);
            EXPECT_DOUBLE_EQ(out.achieved_delta, 1.0);
            ++exhausted;
        }
    }
    EXPECT_GT(exhausted, 0);
    EXPECT_THROW(sample_random_keyset(64, 0.5, 0, rng), std::invalid_argument);
}

TEST(SearchConfig, validation) {
    SearchConfig c;
    EXPECT_NO_THROW(c.validate());
    c.elitism_count = c.population_size;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.mutation_rate = 1.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.crossover_rate = -0.1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(GaSearch, returns_requested_shape_and_revalidated_delta) {
    SearchConfig config;
    config.generations = 30;
    CounterRng rng(9);
    const auto out = ga_search(128, 17, 0.01, config, rng);
    EXPECT_EQ(out.keyset.size(), 17u);
    EXPECT_EQ(out.keyset.modulus(), 128u);
    for (auto k : out.keyset.keys()) EXPECT_LT(k, 128u);
    EXPECT_EQ(out.achieved_delta, bias_profile(out.keyset).delta);
    EXPECT_EQ(out.target_met, out.achieved_delta < 0.01);
}

TEST(GaSearch, elite_fitness_never_increases) {
    SearchConfig config;
    config.generations = 60;
    std::vector<double> trace;
    CounterRng rng(31);
    ga_search(64, 9, 1e-6, config, rng, [&](std::size_t, double best) { trace.push_back(best); });
    ASSERT_EQ(trace.size(), 61u);
    for (std::size_t i = 1; i < trace.size(); ++i) EXPECT_LE(trace[i], trace[i - 1]);
    EXPECT_LT(trace.back(), trace.front());
}

TEST(GaSearch, no_variation_keeps_fitness_fixed) {
    SearchConfig config;
    config.generations = 25;
    config.mutation_rate = 0;
    config.crossover_rate = 0;
    config.elitism_count = 0;
    const std::vector<std::vector<std::uint64_t>> clones(10, {1, 5, 9, 20, 21});
    std::vector<double> trace;
    CounterRng rng(4);
    const auto out = ga_search(32, 5, 0.001, config, rng, [&](std::size_t, double b) { trace.push_back(b); }, clones);
    for (double v : trace) EXPECT_EQ(v, trace.front());
    EXPECT_EQ(out.keyset.keys(), clones.front());
    EXPECT_EQ(out.generations_used, 25u);
    EXPECT_FALSE(out.target_met);
}

TEST(GaSearch, stops_early_when_target_met) {
    SearchConfig config;
    CounterRng rng(12);
    // Any set beats 0.99 unless degenerate; the initial population suffices.
    const auto out = ga_search(1024, 40, 0.99, config, rng);
    EXPECT_TRUE(out.target_met);
    EXPECT_EQ(out.generations_used, 0u);
}

TEST(GaSearch, deterministic_replay) {
    SearchConfig config;
    config.generations = 40;
    CounterRng a(5), b(5), c(6);
    const auto x = ga_search(64, 11, 0.01, config, a);
    const auto y = ga_search(64, 11, 0.01, config, b);
    const auto z = ga_search(64, 11, 0.01, config, c);
    EXPECT_EQ(x.keyset, y.keyset);
    EXPECT_EQ(x.achieved_delta, y.achieved_delta);
    EXPECT_EQ(x.generations_used, y.generations_used);
    EXPECT_NE(x.keyset, z.keyset);
}

TEST(GaSearch, rejects_bad_arguments) {
    SearchConfig config;
    CounterRng rng(1);
    EXPECT_THROW(ga_search(64, 0, 0.1, config, rng), std::invalid_argument);
    EXPECT_THROW(ga_search(64, 4, 1.0, config, rng), std::invalid_argument);
    config.elitism_count = 5;
    EXPECT_THROW(ga_search(64, 4, 0.1, config, rng, {}, {{1, 2, 3, 4}}), std::invalid_argument);
}
