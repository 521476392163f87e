#pragma once

// Positivity of translations, the functional Γ_f, the polytope K of
// normalized positive functionals, the translation action on K and the Haar
// measure as its fixed point.
//
// The existence arguments are replaced by finite constructions: the positive
// extension of Γ_f is an LP feasibility problem, and the fixed point of the
// action is found either exactly (null space of the stacked invariance
// system) or by Cesàro averaging of the averaged action.

#include "hypal/algebra.hpp"
#include "hypal/core.hpp"
#include "hypal/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypal {

/// Raised when a dominating measure cannot exist because some point is not
/// reached by any translate of f.
class CoverageError : public InputError {
 public:
  CoverageError(const std::string& symbol, Index point)
      : InputError("translates of f do not dominate: no translate of f is positive at \"" + symbol + "\""),
        point_(point) {}
  Index point() const { return point_; }

 private:
  Index point_;
};

// --- positivity of translations ---------------------------------------------

struct PptCertificate {
  Measure mu;  // μ∗f ≤ ν∗f pointwise
  Measure nu;  // and ‖μ‖ > ‖ν‖
};

struct PptVerdict {
  bool holds = true;
  Rational optimum;  // max ρ(H) over {ρ∗f ≤ 0, ‖ρ‖ ≤ 1}
  std::optional<PptCertificate> certificate;
};

/// Throws InputError unless f is a nonzero positive function of the right size.
void require_test_function(const ConvolutionTable& t, const FunctionOnH& f);

/// Decides whether μ∗f ≤ ν∗f ⇒ ‖μ‖ ≤ ‖ν‖ for all positive μ, ν. Works on any
/// structurally well-formed table, including ones that fail the axioms.
PptVerdict ppt_check(const ConvolutionTable& t, const FunctionOnH& f);

bool verify_ppt_certificate(const ConvolutionTable& t, const FunctionOnH& f, const PptCertificate& c);

// --- Γ_f ------------------------------------------------------------------------

/// Whether Γ_f(ρ∗f) = ρ(H) is consistent: ρ(H) must vanish on the kernel of
/// ρ ↦ ρ∗f.
struct GammaReport {
  Index translate_rank = 0;
  std::vector<Measure> kernel_basis;
  std::vector<Rational> kernel_masses;
  bool well_defined = true;
};

GammaReport gamma_well_defined(const ConvolutionTable& t, const FunctionOnH& f);

/// A positive measure of least mass with g ≤ μ∗f pointwise. Throws
/// CoverageError if some point is not covered by any translate of f.
Measure dominate(const ConvolutionTable& t, const FunctionOnH& f, const FunctionOnH& g);

// --- the polytope K -------------------------------------------------------------

/// K = {w ≥ 0 : ⟨w, δ_s∗f⟩ = 1 for every s}. By linearity every w ∈ K has
/// ⟨w, μ∗f⟩ = μ(H) for all μ.
class KPolytope {
 public:
  KPolytope(ConvolutionTable t, FunctionOnH f);

  const ConvolutionTable& table() const { return table_; }
  const FunctionOnH& function() const { return f_; }
  /// Column s is δ_s∗f; the constraints are translatesᵀ w = 1.
  const RMatrix& translates() const { return translates_; }

  bool contains(const Measure& w) const;
  lp::LinearProgram program() const;

  /// Vertices, by enumeration of basic solutions. Exponential in the number
  /// of elements; meant for small tables.
  std::vector<Measure> vertices() const;

 private:
  ConvolutionTable table_;
  FunctionOnH f_;
  RMatrix translates_;
};

KPolytope build_K(const ConvolutionTable& t, const FunctionOnH& f);

struct KFeasibility {
  std::optional<Measure> point;
  std::optional<RVector> farkas;
};

KFeasibility k_feasible(const KPolytope& k);

// --- the translation action -------------------------------------------------------

/// x·Λ(g) = Λ(δ_x̌∗g) on measures: ⟨A_x w, g⟩ = ⟨w, δ_x̌∗g⟩, so
/// (A_x)[z][y] = c[x][y][z] and column y of A_x is δ_x∗δ_y.
struct ActionMatrix {
  Index element;
  RMatrix matrix;
};

ActionMatrix action_matrix(const ConvolutionTable& t, Index x);

/// (1/n) Σ_x A_x, the action averaged against the uniform measure.
template <class Scalar>
Matrix<Scalar> averaged_action(const ConvolutionTable& t) {
  Matrix<Scalar> p = Matrix<Scalar>::Zero(t.size(), t.size());
  for (Index x = 0; x < t.size(); ++x) p += t.left_as<Scalar>(x);
  return p / Scalar(t.size());
}

// --- Haar measure -----------------------------------------------------------------

enum class HaarMethod { Direct, Nullspace, Cesaro };
enum class Normalization { IdentityOne, FunctionalOne };  // λ_e = 1 | Λ(f) = 1

std::string to_string(HaarMethod m);
std::string to_string(Normalization n);
HaarMethod parse_haar_method(const std::string& s);

struct HaarOptions {
  double tol = 1e-12;
  long max_iter = 100000;
  long block_length = 64;  // Cesàro restart period
};

struct HaarResult {
  HaarMethod method;
  Normalization normalization;
  std::optional<Measure> weights;   // exact: direct, nullspace, Cesàro fallback
  Vector<double> numeric;           // always set
  /// ⟨λ, f⟩ for exact results; Λ_0 = λ / functional_scale lies in K.
  std::optional<Rational> functional_scale;
  long iterations = 0;
  double residual = 0.0;            // max_x ‖A_x λ − λ‖_∞
  bool fell_back = false;           // Cesàro did not converge; nullspace used
};

/// λ_x = 1 / c[x][x̌][e], λ_e = 1. Throws ComputationError if some
/// c[x][x̌][e] vanishes.
HaarResult direct_haar(const ConvolutionTable& t);

/// Unique solution of A_x w = w (all x) and w ∈ aff(K), rescaled to λ_e = 1.
HaarResult nullspace_haar(const ConvolutionTable& t, const FunctionOnH& f);

/// Restarted Cesàro averaging of P = (1/n) Σ A_x from a point of K, in
/// binary64. Each block of `block_length` steps replaces the current point
/// with the average of its iterates; the result stays in K. Per-element
/// invariance is checked after every block; on failure to reach `tol` the
/// exact nullspace solution is returned with fell_back set.
HaarResult cesaro_haar(const ConvolutionTable& t, const FunctionOnH& f, const HaarOptions& options = {});

HaarResult fixed_point_haar(const ConvolutionTable& t, const FunctionOnH& f, HaarMethod method,
                            const HaarOptions& options = {});

struct InvarianceCheck {
  bool invariant = true;
  Rational worst;          // exact path
  double worst_numeric = 0.0;
  Index x = 0, z = 0;      // where the worst residual occurs
};

/// Σ_y c[x][y][z] λ_y = λ_z for all x, z, exactly.
InvarianceCheck check_left_invariance(const ConvolutionTable& t, const Measure& lambda);

/// Same, in binary64, with `invariant` meaning worst residual ≤ tol.
InvarianceCheck check_left_invariance(const ConvolutionTable& t, const Vector<double>& lambda, double tol);

}  // namespace hypal
