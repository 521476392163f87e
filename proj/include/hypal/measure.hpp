#pragma once

#include "hypal/rational.hpp"

namespace hypal {

/// Signed measure on a finite hypergroup: one weight per element.
template <class Scalar>
struct BasicMeasure {
  Vector<Scalar> weights;

  BasicMeasure() = default;
  explicit BasicMeasure(Vector<Scalar> w) : weights(std::move(w)) {}

  static BasicMeasure zero(Index n) { return BasicMeasure(Vector<Scalar>::Zero(n)); }
  static BasicMeasure point(Index n, Index x) {
    BasicMeasure m = zero(n);
    m.weights(x) = Scalar(1);
    return m;
  }

  Index size() const { return weights.size(); }
  const Scalar& operator[](Index x) const { return weights(x); }
  Scalar& operator[](Index x) { return weights(x); }

  /// μ(H)
  Scalar mass() const { return weights.sum(); }
  /// ‖μ‖ = Σ|μ_x|
  Scalar total_variation() const {
    Scalar s(0);
    for (Index i = 0; i < weights.size(); ++i) s += weights(i) < 0 ? Scalar(-weights(i)) : weights(i);
    return s;
  }
  bool is_positive() const {
    for (Index i = 0; i < weights.size(); ++i)
      if (weights(i) < 0) return false;
    return true;
  }

  friend BasicMeasure operator+(const BasicMeasure& a, const BasicMeasure& b) {
    return BasicMeasure(a.weights + b.weights);
  }
  friend BasicMeasure operator-(const BasicMeasure& a, const BasicMeasure& b) {
    return BasicMeasure(a.weights - b.weights);
  }
  friend BasicMeasure operator*(const Scalar& s, const BasicMeasure& a) {
    return BasicMeasure(Vector<Scalar>(a.weights * s));
  }
  friend bool operator==(const BasicMeasure& a, const BasicMeasure& b) {
    return a.weights.size() == b.weights.size() && a.weights == b.weights;
  }
};

/// Real-valued function on a finite hypergroup. For finite discrete H every
/// bounded function is compactly supported and uniformly continuous, so this
/// one type stands in for C(H), C_C(H), UCB_r(H) and WUCB_r(H).
template <class Scalar>
struct BasicFunction {
  Vector<Scalar> values;

  BasicFunction() = default;
  explicit BasicFunction(Vector<Scalar> v) : values(std::move(v)) {}

  static BasicFunction zero(Index n) { return BasicFunction(Vector<Scalar>::Zero(n)); }
  static BasicFunction constant(Index n, const Scalar& c) {
    return BasicFunction(Vector<Scalar>::Constant(n, c));
  }
  static BasicFunction indicator(Index n, Index x) {
    BasicFunction f = zero(n);
    f.values(x) = Scalar(1);
    return f;
  }

  Index size() const { return values.size(); }
  const Scalar& operator()(Index x) const { return values(x); }
  Scalar& operator()(Index x) { return values(x); }

  bool is_positive() const {
    for (Index i = 0; i < values.size(); ++i)
      if (values(i) < 0) return false;
    return true;
  }
  bool is_nonzero() const {
    for (Index i = 0; i < values.size(); ++i)
      if (values(i) != 0) return true;
    return false;
  }

  friend bool operator==(const BasicFunction& a, const BasicFunction& b) {
    return a.values.size() == b.values.size() && a.values == b.values;
  }
};

using Measure = BasicMeasure<Rational>;
using FunctionOnH = BasicFunction<Rational>;

}  // namespace hypal
