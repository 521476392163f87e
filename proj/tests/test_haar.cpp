#include "helpers.hpp"
#include "oracles.hpp"

#include "hypal/haar.hpp"
#include "hypal/sampling.hpp"

using namespace testing;

namespace {

Measure oracle_haar(const ConvolutionTable& t) {
  auto w = oracle::haar_by_elimination(t);
  REQUIRE(w.has_value());
  Measure m = Measure::zero(t.size());
  for (Index i = 0; i < t.size(); ++i) m[i] = (*w)[static_cast<std::size_t>(i)];
  return m;
}

// ppt by vertex enumeration over (p, q): translates·(p − q) ≤ 0, Σ(p+q) ≤ 1, p, q ≥ 0.
Rational ppt_optimum_by_enumeration(const ConvolutionTable& t, const FunctionOnH& f) {
  const std::size_t n = static_cast<std::size_t>(t.size());
  RMatrix tr = translation_matrix(t, f);
  oracle::Dense a;
  oracle::Row b, c(2 * n, Rational(0));
  for (std::size_t y = 0; y < n; ++y) {
    oracle::Row row(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      row[x] = tr(static_cast<Index>(y), static_cast<Index>(x));
      row[n + x] = -row[x];
    }
    a.push_back(row);
    b.push_back(0);
  }
  a.push_back(oracle::Row(2 * n, Rational(1)));
  b.push_back(1);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    oracle::Row row(2 * n, Rational(0));
    row[k] = -1;
    a.push_back(row);
    b.push_back(0);
    c[k] = k < n ? 1 : -1;
  }
  return *oracle::max_by_vertex_enumeration(a, b, c);
}

}  // namespace

TEST_CASE("ppt examples") {
  const ConvolutionTable& z2 = table("z2");
  FunctionOnH ia = FunctionOnH::indicator(2, 1);
  PptVerdict v = ppt_check(z2, ia);
  CHECK(v.holds);
  CHECK(v.optimum == ppt_optimum_by_enumeration(z2, ia));
  CHECK(v.optimum == 0);

  FunctionOnH ie = FunctionOnH::indicator(2, 0);
  PptVerdict ns = ppt_check(no_support_table(), ie);
  REQUIRE_FALSE(ns.holds);
  REQUIRE(ns.certificate.has_value());
  CHECK(ns.certificate->mu == Measure::point(2, 1));
  CHECK(ns.certificate->nu == Measure::zero(2));
  CHECK(ns.optimum == ppt_optimum_by_enumeration(no_support_table(), ie));
  CHECK(verify_ppt_certificate(no_support_table(), ie, *ns.certificate));

  const ConvolutionTable& s3c = table("s3c");
  CHECK(ppt_check(s3c, FunctionOnH::constant(3, 1)).holds);
}

TEST_CASE("ppt optimum matches enumeration over the corpus") {
  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    if (t.size() > 3) continue;  // enumeration is C(4n+1, 2n)
    for (const auto& f : indicator_functions(t.size())) CHECK(ppt_check(t, f).optimum == ppt_optimum_by_enumeration(t, f));
  }
}

TEST_CASE("certificates that do not certify are rejected") {
  FunctionOnH ie = FunctionOnH::indicator(2, 0);
  CHECK_FALSE(verify_ppt_certificate(no_support_table(), ie, {Measure::point(2, 0), Measure::zero(2)}));
  CHECK_FALSE(verify_ppt_certificate(table("z2"), FunctionOnH::indicator(2, 1), {Measure::point(2, 1), Measure::zero(2)}));
  CHECK_FALSE(verify_ppt_certificate(no_support_table(), ie, {measure({"0", "-1"}), Measure::zero(2)}));
}

TEST_CASE("test functions must be positive and nonzero") {
  const ConvolutionTable& z2 = table("z2");
  CHECK_THROWS_AS(ppt_check(z2, FunctionOnH::zero(2)), InputError);
  CHECK_THROWS_AS(ppt_check(z2, function({"1", "-1"})), InputError);
  CHECK_THROWS_AS(ppt_check(z2, FunctionOnH::constant(3, 1)), InputError);
  CHECK_THROWS_AS(gamma_well_defined(z2, FunctionOnH::zero(2)), InputError);
}

TEST_CASE("gamma examples") {
  GammaReport h = gamma_well_defined(table("h2_half"), FunctionOnH::indicator(2, 1));
  CHECK(h.translate_rank == 2);
  CHECK(h.kernel_basis.empty());
  CHECK(h.well_defined);

  for (const char* stem : {"z2", "z3", "s3"}) {
    const ConvolutionTable& t = table(stem);
    GammaReport r = gamma_well_defined(t, FunctionOnH::constant(t.size(), 1));
    CHECK(r.translate_rank == 1);
    CHECK(static_cast<Index>(r.kernel_basis.size()) == t.size() - 1);
    for (const auto& m : r.kernel_masses) CHECK(m == 0);
    CHECK(r.well_defined);
  }

  GammaReport ns = gamma_well_defined(no_support_table(), FunctionOnH::indicator(2, 0));
  CHECK_FALSE(ns.well_defined);
  REQUIRE(ns.kernel_basis.size() == 1);
  CHECK(ns.kernel_basis[0] == Measure::point(2, 1));
  CHECK(ns.kernel_masses[0] == 1);
}

TEST_CASE("dominate") {
  const ConvolutionTable& h2 = table("h2_half");
  FunctionOnH ia = FunctionOnH::indicator(2, 1);
  CHECK(dominate(h2, ia, function({"-1", "0"})) == Measure::zero(2));
  CHECK(dominate(h2, ia, ia).mass() <= 1);

  FunctionOnH one = FunctionOnH::constant(2, 1);
  Measure mu = dominate(h2, ia, one);
  CHECK(mu.is_positive());
  FunctionOnH cover = translate_function(h2, mu, ia);
  for (Index y = 0; y < 2; ++y) CHECK(cover(y) >= 1);
  // Least mass: δ_a∗1_a = (1, 1/2), δ_e∗1_a = (0, 1); (1, 1/2) needs mass 1 on δ_a, then 1/2 on δ_e.
  CHECK(mu.mass() == Rational(3, 2));

  CHECK_THROWS_AS(dominate(no_support_table(), FunctionOnH::indicator(2, 0), one), CoverageError);
  try {
    dominate(no_support_table(), FunctionOnH::indicator(2, 0), one);
  } catch (const CoverageError& e) {
    CHECK(e.point() == 1);
    CHECK(std::string(e.what()).find("\"a\"") != std::string::npos);
  }
}

TEST_CASE("build_K and k_feasible examples") {
  KPolytope z = build_K(table("z2"), FunctionOnH::indicator(2, 1));
  CHECK(z.translates() == RMatrix((RMatrix(2, 2) << Rational(0), Rational(1), Rational(1), Rational(0)).finished()));
  auto zv = z.vertices();
  REQUIRE(zv.size() == 1);
  CHECK(zv[0] == measure({"1", "1"}));
  CHECK(*k_feasible(z).point == measure({"1", "1"}));

  KPolytope h = build_K(table("h2_half"), FunctionOnH::indicator(2, 1));
  auto hv = h.vertices();
  REQUIRE(hv.size() == 1);
  CHECK(hv[0] == measure({"1/2", "1"}));
  CHECK(*k_feasible(h).point == measure({"1/2", "1"}));
  CHECK_FALSE(h.contains(measure({"1", "2"})));

  KPolytope s = build_K(table("s3c"), FunctionOnH::constant(3, 1));
  auto sv = s.vertices();
  CHECK(sv.size() == 3);
  for (const auto& v : sv) {
    CHECK(v.mass() == 1);
    CHECK(v.is_positive());
  }
  KFeasibility sp = k_feasible(s);
  REQUIRE(sp.point.has_value());
  CHECK(s.contains(*sp.point));
  CHECK(sp.point->mass() == 1);

  KFeasibility ns = k_feasible(build_K(no_support_table(), FunctionOnH::indicator(2, 0)));
  CHECK_FALSE(ns.point.has_value());
  CHECK(ns.farkas.has_value());
}

TEST_CASE("action matrices") {
  const ConvolutionTable& z2 = table("z2");
  CHECK(action_matrix(z2, 0).matrix == RMatrix::Identity(2, 2));
  RMatrix swap(2, 2);
  swap << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(action_matrix(z2, 1).matrix == swap);
  RMatrix h(2, 2);
  h << Rational(0), Rational(1, 2), Rational(1), Rational(1, 2);
  CHECK(action_matrix(table("h2_half"), 1).matrix == h);

  std::mt19937_64 rng(17);
  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    const Index n = t.size();
    CHECK(action_matrix(t, 0).matrix == RMatrix::Identity(n, n));
    for (Index x = 0; x < n; ++x) {
      RMatrix a = action_matrix(t, x).matrix;
      for (Index y = 0; y < n; ++y) CHECK(a.col(y).sum() == 1);
      for (Index y = 0; y < n; ++y) {
        RMatrix sum = RMatrix::Zero(n, n);
        for (Index s = 0; s < n; ++s) sum += action_matrix(t, s).matrix * t(x, y, s);
        CHECK(RMatrix(a * action_matrix(t, y).matrix) == sum);
      }
      // ⟨A_x w, g⟩ = ⟨w, δ_x̌∗g⟩
      Measure w = random_measure(rng, n);
      FunctionOnH fn = random_function(rng, n);
      CHECK(integrate(Measure(RVector(a * w.weights)), fn) == integrate(w, translate_point(t, t.involution(x), fn)));
    }
  }
}

TEST_CASE("the action preserves K") {
  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    for (const auto& f : {FunctionOnH::constant(t.size(), 1), FunctionOnH::indicator(t.size(), t.size() - 1)}) {
      KPolytope k = build_K(t, f);
      auto w = k_feasible(k).point;
      REQUIRE(w.has_value());
      for (Index x = 0; x < t.size(); ++x) CHECK(k.contains(Measure(RVector(action_matrix(t, x).matrix * w->weights))));
    }
  }
}

TEST_CASE("Haar methods") {
  CHECK(*direct_haar(table("z2")).weights == measure({"1", "1"}));
  CHECK(*direct_haar(table("h2_half")).weights == measure({"1", "2"}));
  CHECK(*direct_haar(table("s3c")).weights == measure({"1", "3", "2"}));
  CHECK_THROWS(fixed_point_haar(no_support_table(), FunctionOnH::indicator(2, 0), HaarMethod::Direct));

  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    INFO(g.file_stem);
    Measure expected = oracle_haar(t);
    FunctionOnH one = FunctionOnH::constant(t.size(), 1);
    HaarResult d = fixed_point_haar(t, one, HaarMethod::Direct);
    HaarResult ns = fixed_point_haar(t, one, HaarMethod::Nullspace);
    CHECK(*d.weights == expected);
    CHECK(*ns.weights == expected);
    CHECK(ns.normalization == Normalization::IdentityOne);
    CHECK(*ns.functional_scale == expected.mass());
    CHECK(check_left_invariance(t, expected).invariant);

    for (Index s = 0; s < t.size(); ++s) {
      FunctionOnH f = FunctionOnH::indicator(t.size(), s);
      CHECK(*fixed_point_haar(t, f, HaarMethod::Nullspace).weights == expected);
      HaarResult c = fixed_point_haar(t, f, HaarMethod::Cesaro);
      CHECK_FALSE(c.fell_back);
      CHECK(c.residual < 1e-12);
      CHECK(c.iterations <= 100000);
      // Λ_0 = λ / ⟨λ, f⟩ lies in K.
      const double scale = to_double(integrate(expected, f));
      for (Index i = 0; i < t.size(); ++i) CHECK(std::abs(c.numeric(i) - to_double(expected[i]) / scale) < 1e-10);
      CHECK(check_left_invariance(t, c.numeric, 1e-12).invariant);
    }
  }
}

TEST_CASE("Cesàro falls back when the budget is too small") {
  const ConvolutionTable& t = table("h2_quarter");
  HaarOptions tight;
  tight.max_iter = 1;
  tight.block_length = 1;
  tight.tol = 1e-300;
  HaarResult c = cesaro_haar(t, FunctionOnH::constant(2, 1), tight);
  CHECK(c.fell_back);
  CHECK(*c.weights == measure({"1", "4"}));
}

TEST_CASE("check_left_invariance examples") {
  CHECK(check_left_invariance(table("z2"), measure({"1", "1"})).invariant);
  CHECK(check_left_invariance(table("h2_half"), measure({"1", "2"})).invariant);
  InvarianceCheck bad = check_left_invariance(table("h2_half"), measure({"1", "1"}));
  CHECK_FALSE(bad.invariant);
  CHECK(bad.worst == Rational(1, 2));
  CHECK(bad.x == 1);
  CHECK(bad.z == 0);
  CHECK(check_left_invariance(table("s3c"), measure({"1", "3", "2"})).invariant);

  Vector<double> approx(2);
  approx << 1.0, 2.0 + 1e-9;
  CHECK_FALSE(check_left_invariance(table("h2_half"), approx, 1e-12).invariant);
  CHECK(check_left_invariance(table("h2_half"), approx, 1e-8).invariant);
}

TEST_CASE("the averaged action is column-stochastic and keeps Cesàro iterates in K") {
  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    RMatrix p = averaged_action<Rational>(t);
    for (Index y = 0; y < t.size(); ++y) CHECK(p.col(y).sum() == 1);
    KPolytope k = build_K(t, FunctionOnH::indicator(t.size(), 0));
    Measure w = *k_feasible(k).point;
    Measure avg = w;
    for (int step = 1; step <= 6; ++step) {
      w = Measure(RVector(p * w.weights));
      avg = Measure(RVector((avg.weights * Rational(step) + w.weights) / Rational(step + 1)));
      CHECK(k.contains(w));
      CHECK(k.contains(avg));
    }
  }
}
