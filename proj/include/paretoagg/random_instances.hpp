#pragma once

// Deterministic random-instance generators shared by the duality batch mode
// and the test suites.

#include <cstdint>
#include <random>

#include "paretoagg/core_types.hpp"
#include "paretoagg/seu_pooling.hpp"

namespace paretoagg {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// M in [2, m_max], N in [1, n_max], utilities uniform in [-1, 1].
Problem random_problem(std::mt19937_64& rng, std::size_t m_max = 6, std::size_t n_max = 4);

// Utilities with entries j/denom, j integer in [-denom, denom].
Problem random_rational_problem(std::mt19937_64& rng, std::size_t m_max = 3,
                                std::size_t n_max = 3, int denom = 8);

Belief random_belief(std::mt19937_64& rng, std::size_t states);

} // namespace paretoagg
