#pragma once

#include "hypal/measure.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hypal {

/// Seed for pseudorandom samples: HYPAL_SEED if set and numeric, else 0.
std::uint64_t sample_seed_from_env();

/// Nonzero function with integer values in [0, 5].
FunctionOnH random_positive_function(std::mt19937_64& rng, Index n);

/// `count` random positive functions from a generator seeded with `seed`.
std::vector<FunctionOnH> random_positive_functions(Index n, std::size_t count, std::uint64_t seed);

/// All indicator functions 1_{x}, in element order.
std::vector<FunctionOnH> indicator_functions(Index n);

}  // namespace hypal
