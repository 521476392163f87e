#include "hypal/sampling.hpp"

#include <cstdlib>
#include <string>

namespace hypal {

std::uint64_t sample_seed_from_env() {
  const char* raw = std::getenv("HYPAL_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    return 0;
  }
}

FunctionOnH random_positive_function(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<int> value(0, 5);
  FunctionOnH f = FunctionOnH::zero(n);
  while (!f.is_nonzero())
    for (Index x = 0; x < n; ++x) f(x) = Rational(value(rng));
  return f;
}

std::vector<FunctionOnH> random_positive_functions(Index n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FunctionOnH> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_positive_function(rng, n));
  return out;
}

std::vector<FunctionOnH> indicator_functions(Index n) {
  std::vector<FunctionOnH> out;
  for (Index x = 0; x < n; ++x) out.push_back(FunctionOnH::indicator(n, x));
  return out;
}

}  // namespace hypal
