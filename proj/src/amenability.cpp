#include "hypal/amenability.hpp"

#include "hypal/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hypal {

lp::LinearProgram invariant_mean_program(const ConvolutionTable& t) {
  const Index n = t.size();
  lp::LinearProgram prog(n);
  for (Index x = 0; x < n; ++x)
    for (Index z = 0; z < n; ++z) {
      RVector row = t.left(x).row(z).transpose();
      row(z) -= 1;
      prog.add(std::move(row), lp::Sense::Equal, Rational(0));
    }
  prog.add(RVector::Ones(n), lp::Sense::Equal, Rational(1));
  return prog;
}

MeanResult invariant_mean(const ConvolutionTable& t) {
  lp::Feasibility r = lp::feasible_point(invariant_mean_program(t));
  MeanResult out;
  if (r.point)
    out.mean = Mean{Measure(std::move(*r.point))};
  else
    out.farkas = std::move(r.farkas);
  return out;
}

namespace {

template <class Scalar>
Scalar magnitude(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return abs(v);
  else
    return std::abs(v);
}

template <class Scalar>
void check_mean(const ConvolutionTable& t, const BasicMeasure<Scalar>& m, std::size_t sample_size,
                std::uint64_t seed, const Scalar& tol, MeanCheck& out, Scalar& worst) {
  const Index n = t.size();
  worst = Scalar(0);
  for (Index x = 0; x < n; ++x) {
    const Vector<Scalar> diff = t.left_as<Scalar>(x) * m.weights - m.weights;
    for (Index z = 0; z < n; ++z) worst = std::max(worst, magnitude(Scalar(diff(z))));
  }
  out.system_invariant = worst <= tol;

  std::vector<FunctionOnH> sample = indicator_functions(n);
  for (auto& f : random_positive_functions(n, sample_size, seed)) sample.push_back(std::move(f));
  Scalar functional_worst(0);
  for (const FunctionOnH& exact : sample) {
    BasicFunction<Scalar> f;
    if constexpr (std::is_same_v<Scalar, Rational>)
      f = exact;
    else
      f = BasicFunction<Scalar>(exact.values.template cast<Scalar>());
    const Scalar base = integrate(m, f);
    for (Index x = 0; x < n; ++x)
      functional_worst = std::max(functional_worst, magnitude(Scalar(integrate(m, translate_point(t, x, f)) - base)));
  }
  out.functional_invariant = functional_worst <= tol;
  worst = std::max(worst, functional_worst);
  Scalar mass = m.mass() - Scalar(1);
  out.invariant = out.system_invariant && out.functional_invariant && m.is_positive() && magnitude(mass) <= tol;
}

}  // namespace

MeanCheck verify_mean(const ConvolutionTable& t, const Mean& m, std::size_t sample_size, std::uint64_t seed) {
  if (m.weights.size() != t.size()) throw InputError("mean has the wrong number of weights");
  MeanCheck out;
  Rational worst;
  check_mean<Rational>(t, m.weights, sample_size, seed, Rational(0), out, worst);
  out.worst_exact = worst;
  out.worst_residual = to_double(worst);
  return out;
}

MeanCheck verify_mean(const ConvolutionTable& t, const BasicMean<double>& m, std::size_t sample_size,
                      std::uint64_t seed, double tol) {
  if (m.weights.size() != t.size()) throw InputError("mean has the wrong number of weights");
  MeanCheck out;
  double worst = 0.0;
  check_mean<double>(t, m.weights, sample_size, seed, tol, out, worst);
  out.worst_residual = worst;
  return out;
}

bool EquivalenceReport::ppt_for_all() const {
  return !tested.empty() &&
         std::all_of(tested.begin(), tested.end(), [](const TestedFunction& f) { return f.verdict.holds; });
}

bool EquivalenceReport::ppt_for_some() const {
  return std::any_of(tested.begin(), tested.end(), [](const TestedFunction& f) { return f.verdict.holds; });
}

EquivalenceReport equivalence_report(const ConvolutionTable& t, std::uint64_t seed, std::size_t random_count) {
  EquivalenceReport r;
  r.name = t.name();
  r.mean = invariant_mean(t);
  try {
    HaarResult h = nullspace_haar(t, FunctionOnH::constant(t.size(), Rational(1)));
    if (check_left_invariance(t, *h.weights).invariant)
      r.haar = std::move(h);
    else
      r.haar_error = "nullspace solution failed the invariance check";
  } catch (const ComputationError& e) {
    r.haar_error = e.what();
  }
  const Index n = t.size();
  for (Index x = 0; x < n; ++x) {
    FunctionOnH f = FunctionOnH::indicator(n, x);
    PptVerdict v = ppt_check(t, f);
    r.tested.push_back({"1_{" + t.symbol(x) + "}", std::move(f), std::move(v)});
  }
  auto random = random_positive_functions(n, random_count, seed);
  for (std::size_t k = 0; k < random.size(); ++k) {
    PptVerdict v = ppt_check(t, random[k]);
    r.tested.push_back({"random #" + std::to_string(k + 1), std::move(random[k]), std::move(v)});
  }
  return r;
}

}  // namespace hypal
