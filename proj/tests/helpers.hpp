#pragma once

#include "hypal/corpus.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <string>

namespace testing {

using namespace hypal;

inline RVector rv(std::initializer_list<const char*> values) {
  RVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const char* s : values) v(i++) = parse_rational(s);
  return v;
}

inline Measure measure(std::initializer_list<const char*> values) { return Measure(rv(values)); }
inline FunctionOnH function(std::initializer_list<const char*> values) { return FunctionOnH(rv(values)); }

inline const GoldenEntry& golden(const std::string& stem) {
  static const std::vector<GoldenEntry> suite = golden_suite();
  for (const auto& g : suite)
    if (g.file_stem == stem) return g;
  throw std::out_of_range("no golden entry " + stem);
}

inline const ConvolutionTable& table(const std::string& stem) { return golden(stem).hypergroup.table(); }

inline const std::vector<GoldenEntry>& suite() {
  static const std::vector<GoldenEntry> s = golden_suite();
  return s;
}

/// Signed measure with small integer weights in [-3, 3].
inline Measure random_measure(std::mt19937_64& rng, Index n, bool positive = false) {
  std::uniform_int_distribution<int> d(positive ? 0 : -3, 3);
  Measure m = Measure::zero(n);
  for (Index i = 0; i < n; ++i) m[i] = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  return m;
}

inline FunctionOnH random_function(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<int> d(-4, 4);
  FunctionOnH f = FunctionOnH::zero(n);
  for (Index i = 0; i < n; ++i) f(i) = Rational(d(rng), 2);
  return f;
}

}  // namespace testing
