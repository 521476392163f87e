#pragma once

// The measure algebra M(H) and the function space C(H) of a finite
// hypergroup. Everything is templated on the scalar so the same code serves
// the exact (Rational) path and the binary64 iteration in haar.hpp.
//
// Translation convention: (δ_x∗f)(y) = Σ_z c[x̌][y][z] f(z), i.e. f integrated
// against δ_x̌∗δ_y. For a group this is f(x⁻¹y). With it, (μ∗ν)∗f = μ∗(ν∗f)
// holds for non-commutative tables too, and left invariance of λ reads
// Σ_y c[x][y][z] λ_y = λ_z.

#include "hypal/core.hpp"
#include "hypal/measure.hpp"

#include <utility>

namespace hypal {

template <class Scalar>
BasicMeasure<Scalar> convolve_measures(const ConvolutionTable& t, const BasicMeasure<Scalar>& mu,
                                       const BasicMeasure<Scalar>& nu) {
  Vector<Scalar> out = Vector<Scalar>::Zero(t.size());
  for (Index x = 0; x < t.size(); ++x) {
    if (mu[x] == Scalar(0)) continue;
    out += (t.left_as<Scalar>(x) * nu.weights) * mu[x];
  }
  return BasicMeasure<Scalar>(std::move(out));
}

/// (μ̌)_z = μ_{σ(z)}
template <class Scalar>
BasicMeasure<Scalar> involute_measure(const ConvolutionTable& t, const BasicMeasure<Scalar>& mu) {
  Vector<Scalar> out(t.size());
  for (Index z = 0; z < t.size(); ++z) out(z) = mu[t.involution(z)];
  return BasicMeasure<Scalar>(std::move(out));
}

/// The n×n matrix whose column x is the translate δ_x∗f.
template <class Scalar>
Matrix<Scalar> translation_matrix(const ConvolutionTable& t, const BasicFunction<Scalar>& f) {
  Matrix<Scalar> out(t.size(), t.size());
  for (Index x = 0; x < t.size(); ++x)
    out.col(x) = t.left_as<Scalar>(t.involution(x)).transpose() * f.values;
  return out;
}

template <class Scalar>
BasicFunction<Scalar> translate_point(const ConvolutionTable& t, Index x, const BasicFunction<Scalar>& f) {
  return BasicFunction<Scalar>(Vector<Scalar>(t.left_as<Scalar>(t.involution(x)).transpose() * f.values));
}

/// μ∗f, bilinear extension of the point translates.
template <class Scalar>
BasicFunction<Scalar> translate_function(const ConvolutionTable& t, const BasicMeasure<Scalar>& mu,
                                         const BasicFunction<Scalar>& f) {
  return BasicFunction<Scalar>(Vector<Scalar>(translation_matrix(t, f) * mu.weights));
}

/// μ = μ₊ − μ₋ with disjoint supports.
template <class Scalar>
std::pair<BasicMeasure<Scalar>, BasicMeasure<Scalar>> jordan_decompose(const BasicMeasure<Scalar>& mu) {
  auto plus = BasicMeasure<Scalar>::zero(mu.size());
  auto minus = BasicMeasure<Scalar>::zero(mu.size());
  for (Index x = 0; x < mu.size(); ++x) {
    if (mu[x] > Scalar(0))
      plus[x] = mu[x];
    else if (mu[x] < Scalar(0))
      minus[x] = -mu[x];
  }
  return {std::move(plus), std::move(minus)};
}

/// ⟨w, f⟩ = Σ_x w_x f(x)
template <class Scalar>
Scalar integrate(const BasicMeasure<Scalar>& w, const BasicFunction<Scalar>& f) {
  return w.weights.dot(f.values);
}

}  // namespace hypal
