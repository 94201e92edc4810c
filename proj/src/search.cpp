#include "qhash/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qhash/bias.hpp"

namespace qhash {

void SearchConfig::validate() const {
    if (population_size == 0) throw std::invalid_argument("population_size must be positive");
    if (generations == 0) throw std::invalid_argument("generations must be positive");
    if (!(mutation_rate >= 0 && mutation_rate <= 1)) throw std::invalid_argument("mutation_rate must lie in [0, 1]");
    if (!(crossover_rate >= 0 && crossover_rate <= 1))
        throw std::invalid_argument("crossover_rate must lie in [0, 1]");
    if (elitism_count >= population_size) throw std::invalid_argument("elitism_count must be below population_size");
}

std::size_t lemma_size(std::uint64_t modulus, double epsilon) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    const double size = 2.0 / (epsilon * epsilon) * std::log(2.0 * static_cast<double>(modulus));
    return static_cast<std::size_t>(std::ceil(size));
}

namespace {

std::vector<std::uint64_t> random_residues(std::uint64_t modulus, std::size_t count, CounterRng& rng) {
    std::vector<std::uint64_t> keys(count);
    for (auto& k : keys) k = rng.below(modulus);
    return keys;
}

double delta_of(std::uint64_t modulus, const std::vector<std::uint64_t>& keys) {
    return bias_profile<double>(KeySet(modulus, keys)).delta;
}

struct Individual {
    std::vector<std::uint64_t> keys;
    double fitness = 1;
};

std::size_t tournament(const std::vector<Individual>& pop, CounterRng& rng) {
    std::size_t best = rng.below(pop.size());
    for (int round = 1; round < 3; ++round) {
        const std::size_t c = rng.below(pop.size());
        if (pop[c].fitness < pop[best].fitness || (pop[c].fitness == pop[best].fitness && c < best)) best = c;
    }
    return best;
}

}  // namespace

SearchOutcome sample_random_keyset(std::uint64_t modulus, double epsilon, std::size_t max_attempts,
                                   CounterRng& rng) {
    if (max_attempts == 0) throw std::invalid_argument("max_attempts must be positive");
    const std::size_t size = lemma_size(modulus, epsilon);
    const CounterRng root = rng.split(rng());

    std::vector<std::uint64_t> best;
    double best_delta = 2;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto draw_rng = root.split(attempt);
        auto keys = random_residues(modulus, size, draw_rng);
        const double delta = delta_of(modulus, keys);
        if (delta < best_delta) {
            best_delta = delta;
            best = std::move(keys);
        }
        if (best_delta < epsilon) {
            KeySet ks(modulus, best);
            const double achieved = bias_profile<double>(ks).delta;
            return {std::move(ks), achieved, attempt + 1, achieved < epsilon};
        }
    }
    KeySet ks(modulus, std::move(best));
    const double achieved = bias_profile<double>(ks).delta;
    return {std::move(ks), achieved, max_attempts, achieved < epsilon};
}

SearchOutcome ga_search(std::uint64_t modulus, std::size_t d, double target_epsilon, const SearchConfig& config,
                        CounterRng& rng, const SearchProgress& progress,
                        const std::vector<std::vector<std::uint64_t>>& initial_population) {
    config.validate();
    if (d == 0) throw std::invalid_argument("d must be positive");
    if (!(target_epsilon > 0 && target_epsilon < 1)) throw std::invalid_argument("target epsilon must lie in (0, 1)");
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");

    const CounterRng root = rng.split(rng());
    const std::size_t pop_size = initial_population.empty() ? config.population_size : initial_population.size();
    if (config.elitism_count >= pop_size) throw std::invalid_argument("elitism_count must be below population size");

    std::vector<Individual> pop(pop_size);
    const CounterRng init_root = root.split(0);
    for (std::size_t i = 0; i < pop_size; ++i) {
        if (initial_population.empty()) {
            auto ind_rng = init_root.split(i);
            pop[i].keys = random_residues(modulus, d, ind_rng);
        } else {
            if (initial_population[i].size() != d) throw std::invalid_argument("initial individual has wrong size");
            pop[i].keys = initial_population[i];
        }
        pop[i].fitness = delta_of(modulus, pop[i].keys);
    }

    auto rank = [&] {
        std::vector<std::size_t> order(pop.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return pop[a].fitness < pop[b].fitness; });
        return order;
    };

    std::vector<std::size_t> order = rank();
    std::size_t generation = 0;
    if (progress) progress(generation, pop[order.front()].fitness);

    while (pop[order.front()].fitness >= target_epsilon && generation < config.generations) {
        ++generation;
        const CounterRng gen_root = root.split(generation);
        std::vector<Individual> next;
        next.reserve(pop.size());
        for (std::size_t e = 0; e < config.elitism_count; ++e) next.push_back(pop[order[e]]);

        for (std::size_t child = next.size(); child < pop.size(); ++child) {
            auto child_rng = gen_root.split(child);
            const auto& a = pop[tournament(pop, child_rng)];
            const auto& b = pop[tournament(pop, child_rng)];
            Individual offspring;
            if (d > 1 && child_rng.bernoulli(config.crossover_rate)) {
                auto sa = a.keys;
                auto sb = b.keys;
                std::sort(sa.begin(), sa.end());
                std::sort(sb.begin(), sb.end());
                const auto cut = static_cast<std::ptrdiff_t>(1 + child_rng.below(d - 1));
                offspring.keys.assign(sa.begin(), sa.begin() + cut);
                offspring.keys.insert(offspring.keys.end(), sb.begin() + cut, sb.end());
            } else {
                offspring.keys = a.keys;
            }
            for (auto& k : offspring.keys) {
                if (child_rng.bernoulli(config.mutation_rate)) k = child_rng.below(modulus);
            }
            offspring.fitness = delta_of(modulus, offspring.keys);
            next.push_back(std::move(offspring));
        }
        pop = std::move(next);
        order = rank();
        if (progress) progress(generation, pop[order.front()].fitness);
    }

    KeySet best(modulus, pop[order.front()].keys);
    const double achieved = bias_profile<double>(best).delta;
    return {std::move(best), achieved, generation, achieved < target_epsilon};
}

}  // namespace qhash
