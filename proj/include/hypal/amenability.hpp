#pragma once

// Invariant means on C(H). For finite discrete H the spaces C(H), UCB_r(H)
// and WUCB_r(H) coincide, so one notion of mean covers all of them.
//
// A mean is a probability weight vector m; left invariance m(δ_x∗f) = m(f)
// for all f is the linear system Σ_y c[x][y][z] m_y = m_z. It is solved here
// by LP feasibility, independently of the Haar solvers.

#include "hypal/haar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypal {

template <class Scalar>
struct BasicMean {
  BasicMeasure<Scalar> weights;
};

using Mean = BasicMean<Rational>;

struct MeanResult {
  std::optional<Mean> mean;
  std::optional<RVector> farkas;  // nonexistence certificate for the LP below
};

/// The invariance LP over m ≥ 0: rows (x, z) ↦ Σ_y c[x][y][z] m_y − m_z = 0
/// in order x-major, then Σ m = 1.
lp::LinearProgram invariant_mean_program(const ConvolutionTable& t);

MeanResult invariant_mean(const ConvolutionTable& t);

struct MeanCheck {
  bool invariant = true;
  bool system_invariant = true;      // matrix formulation
  bool functional_invariant = true;  // m(δ_x∗f) = m(f) on the sample
  double worst_residual = 0.0;
  Rational worst_exact;              // exact means only
};

/// Checks both formulations: the matrix system, and m(δ_x∗f) = m(f) for every
/// x over all indicators plus `sample_size` random positive functions drawn
/// with `seed`. Exact.
MeanCheck verify_mean(const ConvolutionTable& t, const Mean& m, std::size_t sample_size, std::uint64_t seed);

/// Binary64 variant; invariance means residual ≤ tol.
MeanCheck verify_mean(const ConvolutionTable& t, const BasicMean<double>& m, std::size_t sample_size,
                      std::uint64_t seed, double tol);

// --- equivalence of Haar existence and positivity of translations ------------------

struct TestedFunction {
  std::string label;  // "1_{x}" or "random #k"
  FunctionOnH f;
  PptVerdict verdict;
};

/// Three conditions that coincide on a hypergroup carrying an invariant mean:
/// a left Haar measure exists; ppt holds for every tested f; ppt holds for
/// some tested f.
struct EquivalenceReport {
  std::string name;
  MeanResult mean;                 // the amenability hypothesis
  std::optional<HaarResult> haar;  // nullspace solution with f = 1
  std::string haar_error;
  std::vector<TestedFunction> tested;

  bool mean_exists() const { return mean.mean.has_value(); }
  bool haar_exists() const { return haar.has_value(); }
  bool ppt_for_all() const;
  bool ppt_for_some() const;
  bool consistent() const { return haar_exists() == ppt_for_all() && ppt_for_all() == ppt_for_some(); }
};

/// Tests every indicator and `random_count` seeded random positive functions.
EquivalenceReport equivalence_report(const ConvolutionTable& t, std::uint64_t seed, std::size_t random_count = 20);

}  // namespace hypal
