#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qhash/keyset.hpp"
#include "qhash/random.hpp"

namespace qhash {

struct SearchConfig {
    std::size_t population_size = 64;
    std::size_t generations = 500;
    double mutation_rate = 0.1;   // per key
    double crossover_rate = 0.7;
    std::size_t elitism_count = 2;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

struct SearchOutcome {
    KeySet keyset;
    double achieved_delta = 1;
    /// GA generations evolved, or random draws made by sample_random_keyset.
    std::size_t generations_used = 0;
    bool target_met = false;
};

/// Called once per generation with (generation, best delta so far).
using SearchProgress = std::function<void(std::size_t, double)>;

inline constexpr std::size_t kDefaultSampleAttempts = 100;

/// ceil((2 / eps^2) ln(2N)).
std::size_t lemma_size(std::uint64_t modulus, double epsilon);

/// Draws multisets of lemma_size(N, eps) residues (with replacement) until one has
/// delta(K) < eps, or returns the best of `max_attempts` draws with target_met = false.
SearchOutcome sample_random_keyset(std::uint64_t modulus, double epsilon, std::size_t max_attempts,
                                   CounterRng& rng);

/// Generational GA minimising delta(K) over multisets of `d` residues.
///
/// Tournament selection (size 3), one-point crossover of the parents' sorted key
/// lists, per-key uniform resampling mutation and elitism. Stops as soon as the best
/// individual has delta < target_epsilon. `config.rng_seed` is not consulted; the
/// generator is passed explicitly. A non-empty `initial_population` replaces the
/// random initial population (each entry must have d residues).
SearchOutcome ga_search(std::uint64_t modulus, std::size_t d, double target_epsilon, const SearchConfig& config,
                        CounterRng& rng, const SearchProgress& progress = {},
                        const std::vector<std::vector<std::uint64_t>>& initial_population = {});

}  // namespace qhash
