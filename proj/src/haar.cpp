#include "hypal/haar.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hypal {

void require_test_function(const ConvolutionTable& t, const FunctionOnH& f) {
  if (f.size() != t.size())
    throw InputError("test function has " + std::to_string(f.size()) + " values, table has " +
                     std::to_string(t.size()) + " elements");
  if (!f.is_positive()) throw InputError("test function must be nonnegative");
  if (!f.is_nonzero()) throw InputError("test function must be nonzero");
}

// --- ppt ----------------------------------------------------------------------

PptVerdict ppt_check(const ConvolutionTable& t, const FunctionOnH& f) {
  require_test_function(t, f);
  const Index n = t.size();
  const RMatrix translates = translation_matrix(t, f);

  // Variables (p, q) with ρ = p − q.
  lp::LinearProgram prog(2 * n);
  prog.objective << RVector::Ones(n), -RVector::Ones(n);
  for (Index y = 0; y < n; ++y) {
    RVector row(2 * n);
    row << translates.row(y).transpose(), -translates.row(y).transpose();
    prog.add(std::move(row), lp::Sense::LessEqual, Rational(0));
  }
  prog.add(RVector::Ones(2 * n), lp::Sense::LessEqual, Rational(1));

  const lp::Outcome o = lp::solve(prog);
  if (o.status != lp::Status::Optimal) throw std::logic_error("ppt program must have an optimum");

  PptVerdict v;
  v.optimum = o.value;
  v.holds = o.value == 0;
  if (!v.holds) {
    PptCertificate c{Measure(RVector(o.point.head(n))), Measure(RVector(o.point.tail(n)))};
    if (!verify_ppt_certificate(t, f, c)) throw std::logic_error("ppt certificate failed re-verification");
    v.certificate = std::move(c);
  }
  return v;
}

bool verify_ppt_certificate(const ConvolutionTable& t, const FunctionOnH& f, const PptCertificate& c) {
  if (c.mu.size() != t.size() || c.nu.size() != t.size()) return false;
  if (!c.mu.is_positive() || !c.nu.is_positive()) return false;
  const FunctionOnH lhs = translate_function(t, c.mu, f);
  const FunctionOnH rhs = translate_function(t, c.nu, f);
  for (Index y = 0; y < t.size(); ++y)
    if (lhs(y) > rhs(y)) return false;
  return c.mu.total_variation() > c.nu.total_variation();
}

// --- Γ_f --------------------------------------------------------------------------

GammaReport gamma_well_defined(const ConvolutionTable& t, const FunctionOnH& f) {
  require_test_function(t, f);
  const RMatrix translates = translation_matrix(t, f);
  GammaReport r;
  r.translate_rank = lp::rank(translates);
  for (RVector& v : lp::nullspace(translates)) {
    Measure rho(std::move(v));
    Rational mass = rho.mass();
    if (mass != 0) r.well_defined = false;
    r.kernel_masses.push_back(std::move(mass));
    r.kernel_basis.push_back(std::move(rho));
  }
  return r;
}

Measure dominate(const ConvolutionTable& t, const FunctionOnH& f, const FunctionOnH& g) {
  require_test_function(t, f);
  if (g.size() != t.size()) throw InputError("dominated function has the wrong number of values");
  const Index n = t.size();
  const RMatrix translates = translation_matrix(t, f);
  for (Index y = 0; y < n; ++y) {
    bool covered = false;
    for (Index x = 0; x < n && !covered; ++x) covered = translates(y, x) > 0;
    if (!covered) throw CoverageError(t.symbol(y), y);
  }
  lp::LinearProgram prog(n);
  prog.direction = lp::Direction::Minimize;
  prog.objective = RVector::Ones(n);
  for (Index y = 0; y < n; ++y) prog.add(RVector(translates.row(y).transpose()), lp::Sense::GreaterEqual, g(y));
  const lp::Outcome o = lp::solve(prog);
  if (o.status != lp::Status::Optimal) throw std::logic_error("covered domination program must have an optimum");
  Measure mu(o.point);
  const FunctionOnH bound = translate_function(t, mu, f);
  for (Index y = 0; y < n; ++y)
    if (bound(y) < g(y)) throw std::logic_error("dominating measure failed re-verification");
  return mu;
}

// --- K ---------------------------------------------------------------------------------

KPolytope::KPolytope(ConvolutionTable t, FunctionOnH f) : table_(std::move(t)), f_(std::move(f)) {
  require_test_function(table_, f_);
  translates_ = translation_matrix(table_, f_);
}

bool KPolytope::contains(const Measure& w) const {
  if (w.size() != table_.size() || !w.is_positive()) return false;
  return (translates_.transpose() * w.weights) == RVector::Ones(table_.size());
}

lp::LinearProgram KPolytope::program() const {
  const Index n = table_.size();
  lp::LinearProgram prog(n);
  for (Index s = 0; s < n; ++s) prog.add(RVector(translates_.col(s)), lp::Sense::Equal, Rational(1));
  return prog;
}

std::vector<Measure> KPolytope::vertices() const {
  const Index n = table_.size();
  const RMatrix system = translates_.transpose();
  const RVector ones = RVector::Ones(n);
  const Index r = lp::rank(system);
  std::vector<Measure> out;
  if (!lp::solve_linear(system, ones)) return out;
  // Every basic solution uses r linearly independent columns.
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + r, true);
  std::set<std::vector<std::string>> seen;
  do {
    std::vector<Index> cols;
    for (Index j = 0; j < n; ++j)
      if (choose[static_cast<std::size_t>(j)]) cols.push_back(j);
    RMatrix sub(n, r);
    for (Index k = 0; k < r; ++k) sub.col(k) = system.col(cols[static_cast<std::size_t>(k)]);
    if (lp::rank(sub) != r) continue;
    auto partial = lp::solve_linear(sub, ones);
    if (!partial) continue;
    Measure w = Measure::zero(n);
    for (Index k = 0; k < r; ++k) w[cols[static_cast<std::size_t>(k)]] = (*partial)(k);
    if (!contains(w)) continue;
    std::vector<std::string> key;
    for (Index j = 0; j < n; ++j) key.push_back(to_string(w[j]));
    if (seen.insert(key).second) out.push_back(std::move(w));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

KPolytope build_K(const ConvolutionTable& t, const FunctionOnH& f) { return KPolytope(t, f); }

KFeasibility k_feasible(const KPolytope& k) {
  lp::Feasibility r = lp::feasible_point(k.program());
  KFeasibility out;
  if (r.point) {
    out.point = Measure(std::move(*r.point));
    if (!k.contains(*out.point)) throw std::logic_error("K point failed re-verification");
  } else {
    out.farkas = std::move(r.farkas);
  }
  return out;
}

ActionMatrix action_matrix(const ConvolutionTable& t, Index x) {
  if (x < 0 || x >= t.size()) throw UnknownElement("#" + std::to_string(x));
  return ActionMatrix{x, t.left(x)};
}

// --- Haar ---------------------------------------------------------------------------

std::string to_string(HaarMethod m) {
  switch (m) {
    case HaarMethod::Direct: return "direct";
    case HaarMethod::Nullspace: return "nullspace";
    case HaarMethod::Cesaro: return "cesaro";
  }
  return "?";
}

std::string to_string(Normalization n) {
  return n == Normalization::IdentityOne ? "lambda_e=1" : "Lambda(f)=1";
}

HaarMethod parse_haar_method(const std::string& s) {
  if (s == "direct") return HaarMethod::Direct;
  if (s == "nullspace") return HaarMethod::Nullspace;
  if (s == "cesaro") return HaarMethod::Cesaro;
  throw InputError("unknown Haar method \"" + s + "\" (expected direct, nullspace or cesaro)");
}

namespace {

Vector<double> to_numeric(const Measure& m) { return m.weights.cast<double>(); }

double numeric_residual(const ConvolutionTable& t, const Vector<double>& w) {
  double worst = 0.0;
  for (Index x = 0; x < t.size(); ++x)
    worst = std::max(worst, (t.left_as<double>(x) * w - w).cwiseAbs().maxCoeff());
  return worst;
}

HaarResult exact_result(const ConvolutionTable& t, HaarMethod method, Measure lambda,
                        const FunctionOnH* f) {
  HaarResult r{method, Normalization::IdentityOne};
  r.numeric = to_numeric(lambda);
  r.residual = numeric_residual(t, r.numeric);
  if (f) r.functional_scale = integrate(lambda, *f);
  r.weights = std::move(lambda);
  return r;
}

}  // namespace

HaarResult direct_haar(const ConvolutionTable& t) {
  Measure lambda = Measure::zero(t.size());
  for (Index x = 0; x < t.size(); ++x) {
    const Rational& c = t(x, t.involution(x), 0);
    if (c == 0)
      throw ComputationError("direct Haar formula undefined: c[" + t.symbol(x) + "][" +
                             t.symbol(t.involution(x)) + "][e] = 0");
    lambda[x] = Rational(1) / c;
  }
  return exact_result(t, HaarMethod::Direct, std::move(lambda), nullptr);
}

HaarResult nullspace_haar(const ConvolutionTable& t, const FunctionOnH& f) {
  require_test_function(t, f);
  const Index n = t.size();
  const RMatrix translates = translation_matrix(t, f);
  RMatrix system(n * n + n, n);
  RVector rhs = RVector::Zero(n * n + n);
  for (Index x = 0; x < n; ++x) system.middleRows(x * n, n) = t.left(x) - RMatrix::Identity(n, n);
  system.bottomRows(n) = translates.transpose();
  rhs.tail(n) = RVector::Ones(n);

  auto solution = lp::solve_linear(system, rhs);
  if (!solution) throw ComputationError("no invariant functional in K: K is empty or has no fixed point");
  if (lp::rank(system) != n)
    throw ComputationError("invariant functionals in K are not unique; no canonical Haar measure");
  Measure functional(std::move(*solution));
  if (!functional.is_positive()) throw ComputationError("invariant functional is not positive");
  if (functional[0] == 0) throw ComputationError("invariant functional vanishes at the identity");
  const Rational scale = functional[0];
  Measure lambda(RVector(functional.weights / scale));
  return exact_result(t, HaarMethod::Nullspace, std::move(lambda), &f);
}

HaarResult cesaro_haar(const ConvolutionTable& t, const FunctionOnH& f, const HaarOptions& options) {
  const KPolytope k(t, f);
  const KFeasibility start = k_feasible(k);
  if (!start.point) throw ComputationError("K is empty; no starting point for the Cesàro iteration");

  const Matrix<double> p = averaged_action<double>(t);
  Vector<double> w = to_numeric(*start.point);
  const long block = std::max<long>(1, options.block_length);
  long iterations = 0;
  double residual = numeric_residual(t, w);
  while (residual >= options.tol && iterations < options.max_iter) {
    Vector<double> sum = Vector<double>::Zero(w.size());
    Vector<double> v = w;
    const long steps = std::min(block, options.max_iter - iterations);
    for (long s = 0; s < steps; ++s) {
      sum += v;
      v = p * v;
    }
    iterations += steps;
    w = sum / static_cast<double>(steps);
    residual = numeric_residual(t, w);
  }

  if (residual < options.tol) {
    HaarResult r{HaarMethod::Cesaro, Normalization::FunctionalOne};
    r.numeric = std::move(w);
    r.iterations = iterations;
    r.residual = residual;
    return r;
  }
  HaarResult r = nullspace_haar(t, f);
  r.method = HaarMethod::Cesaro;
  r.iterations = iterations;
  r.fell_back = true;
  return r;
}

HaarResult fixed_point_haar(const ConvolutionTable& t, const FunctionOnH& f, HaarMethod method,
                            const HaarOptions& options) {
  switch (method) {
    case HaarMethod::Direct: {
      require_hypergroup(t);
      return direct_haar(t);
    }
    case HaarMethod::Nullspace: return nullspace_haar(t, f);
    case HaarMethod::Cesaro: return cesaro_haar(t, f, options);
  }
  throw std::logic_error("unknown Haar method");
}

InvarianceCheck check_left_invariance(const ConvolutionTable& t, const Measure& lambda) {
  InvarianceCheck c;
  c.worst = 0;
  for (Index x = 0; x < t.size(); ++x) {
    const RVector diff = t.left(x) * lambda.weights - lambda.weights;
    for (Index z = 0; z < t.size(); ++z) {
      Rational r = abs(diff(z));
      if (r > c.worst) {
        c.worst = r;
        c.x = x;
        c.z = z;
      }
    }
  }
  c.invariant = c.worst == 0;
  c.worst_numeric = to_double(c.worst);
  return c;
}

InvarianceCheck check_left_invariance(const ConvolutionTable& t, const Vector<double>& lambda, double tol) {
  InvarianceCheck c;
  for (Index x = 0; x < t.size(); ++x) {
    const Vector<double> diff = t.left_as<double>(x) * lambda - lambda;
    for (Index z = 0; z < t.size(); ++z)
      if (std::abs(diff(z)) > c.worst_numeric) {
        c.worst_numeric = std::abs(diff(z));
        c.x = x;
        c.z = z;
      }
  }
  c.invariant = c.worst_numeric <= tol;
  return c;
}

}  // namespace hypal
