#include "helpers.hpp"
#include "oracles.hpp"

#include "hypal/amenability.hpp"

using namespace testing;

namespace {

// a drift table: e∗e = a, e∗a = e, a∗e = e, a∗a = e. Row sums are 1 and σ = id,
// but L_e is a swap (fixing only the uniform vector) while L_a pushes all mass to e.
ConvolutionTable drift_table() {
  std::vector<RMatrix> s(2, RMatrix::Zero(2, 2));
  s[0](1, 0) = 1;
  s[0](0, 1) = 1;
  s[1](0, 0) = 1;
  s[1](0, 1) = 1;
  return ConvolutionTable("Drift", {"e", "a"}, {0, 1}, s);
}

}  // namespace

TEST_CASE("invariant_mean examples") {
  CHECK(invariant_mean(table("z2")).mean->weights == measure({"1/2", "1/2"}));
  CHECK(invariant_mean(table("h2_half")).mean->weights == measure({"1/3", "2/3"}));
  CHECK(invariant_mean(table("s3c")).mean->weights == measure({"1/6", "1/2", "1/3"}));
}

TEST_CASE("invariant_mean equals normalized Haar on the corpus") {
  for (const auto& g : suite()) {
    const ConvolutionTable& t = g.hypergroup.table();
    auto w = oracle::haar_by_elimination(t);
    REQUIRE(w.has_value());
    Rational total(0);
    for (const auto& v : *w) total += v;
    MeanResult m = invariant_mean(t);
    REQUIRE(m.mean.has_value());
    for (Index i = 0; i < t.size(); ++i) CHECK(m.mean->weights[i] == (*w)[static_cast<std::size_t>(i)] / total);
    CHECK(m.mean->weights == g.mean.weights);
    MeanCheck c = verify_mean(t, *m.mean, 20, 0);
    CHECK(c.invariant);
    CHECK(c.system_invariant);
    CHECK(c.functional_invariant);
    CHECK(c.worst_exact == 0);
  }
}

TEST_CASE("verify_mean examples") {
  CHECK(verify_mean(table("z2"), Mean{measure({"1/2", "1/2"})}, 20, 0).invariant);
  MeanCheck h = verify_mean(table("h2_half"), Mean{measure({"1/2", "1/2"})}, 20, 0);
  CHECK_FALSE(h.invariant);
  CHECK_FALSE(h.system_invariant);
  CHECK_FALSE(h.functional_invariant);
  CHECK(h.worst_exact > 0);
  CHECK(verify_mean(table("s3c"), Mean{measure({"1/6", "1/2", "1/3"})}, 20, 0).invariant);

  BasicMean<double> approx{BasicMeasure<double>(Vector<double>((Vector<double>(2) << 1.0 / 3, 2.0 / 3).finished()))};
  CHECK(verify_mean(table("h2_half"), approx, 20, 0, 1e-12).invariant);
  BasicMean<double> off{BasicMeasure<double>(Vector<double>((Vector<double>(2) << 0.5, 0.5).finished()))};
  MeanCheck o = verify_mean(table("h2_half"), off, 20, 0, 1e-12);
  CHECK_FALSE(o.invariant);
  CHECK(o.worst_residual > 0.1);
}

TEST_CASE("a relaxed table may have no invariant mean") {
  ConvolutionTable d = drift_table();
  MeanResult m = invariant_mean(d);
  CHECK_FALSE(m.mean.has_value());
  REQUIRE(m.farkas.has_value());
  lp::LinearProgram p = invariant_mean_program(d);
  lp::Outcome o;
  o.status = lp::Status::Infeasible;
  o.dual = *m.farkas;
  CHECK(lp::verify_outcome(p, o));

  // NoSupport still has one: δ_a is fixed by both L_e and L_a.
  CHECK(invariant_mean(no_support_table()).mean->weights == Measure::point(2, 1));
}

TEST_CASE("equivalence report on the corpus") {
  for (const auto& g : suite()) {
    EquivalenceReport r = equivalence_report(g.hypergroup.table(), 0);
    INFO(g.file_stem);
    CHECK(r.mean_exists());
    CHECK(r.haar_exists());
    CHECK(r.ppt_for_all());
    CHECK(r.ppt_for_some());
    CHECK(r.consistent());
    CHECK(r.tested.size() == static_cast<std::size_t>(g.hypergroup.size()) + 20);
    CHECK(r.tested.front().label == "1_{" + g.hypergroup.table().symbol(0) + "}");
    CHECK(r.tested.back().label == "random #20");
    CHECK(*r.haar->weights == g.haar);
  }
}

TEST_CASE("equivalence report on relaxed tables") {
  EquivalenceReport ns = equivalence_report(no_support_table(), 0);
  CHECK_FALSE(ns.ppt_for_all());
  CHECK(ns.tested.front().verdict.certificate.has_value());
  EquivalenceReport same = equivalence_report(no_support_table(), 0);
  for (std::size_t i = 0; i < ns.tested.size(); ++i) CHECK(ns.tested[i].f == same.tested[i].f);
}
