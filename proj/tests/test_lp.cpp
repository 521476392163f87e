#include "helpers.hpp"
#include "lp_suite.hpp"
#include "oracles.hpp"

#include "hypal/haar.hpp"

using namespace testing;
using namespace hypal::lp;
using lpsuite::vec;

TEST_CASE("hand-checkable suite") {
  for (const auto& inst : lpsuite::instances()) {
    Outcome o = solve(inst.program);
    std::string why;
    CHECK_MESSAGE(lpsuite::check(inst, o, &why), why);
    CHECK(verify_outcome(inst.program, o));
  }
}

TEST_CASE("the three solve examples") {
  LinearProgram a(1);
  a.objective = vec({1});
  a.add(vec({1}), Sense::LessEqual, 3);
  Outcome oa = solve(a);
  CHECK(oa.status == Status::Optimal);
  CHECK(oa.value == 3);
  CHECK(oa.point == vec({3}));

  LinearProgram b(1);
  b.objective = vec({1});
  b.add(vec({1}), Sense::LessEqual, -1);
  Outcome ob = solve(b);
  CHECK(ob.status == Status::Infeasible);
  CHECK(lpsuite::farkas_ok(b, ob.dual));

  LinearProgram c(2);
  c.objective = vec({1, 1});
  c.add(vec({1, -1}), Sense::Equal, 0);
  Outcome oc = solve(c);
  CHECK(oc.status == Status::Unbounded);
  CHECK(oc.ray == vec({1, 1}));
}

TEST_CASE("verify_outcome rejects tampered certificates") {
  LinearProgram p(2);
  p.objective = vec({3, 2});
  p.add(vec({1, 1}), Sense::LessEqual, 4).add(vec({1, 3}), Sense::LessEqual, 6);
  Outcome o = solve(p);
  REQUIRE(o.status == Status::Optimal);
  CHECK(verify_outcome(p, o));
  Outcome bad = o;
  bad.value += 1;
  CHECK_FALSE(verify_outcome(p, bad));
  bad = o;
  bad.dual(0) -= Rational(1, 7);
  std::string why;
  CHECK_FALSE(verify_outcome(p, bad, &why));
  CHECK_FALSE(why.empty());
  bad = o;
  bad.status = Status::Infeasible;
  CHECK_FALSE(verify_outcome(p, bad));
}

TEST_CASE("dimension mismatch is rejected") {
  LinearProgram p(2);
  p.add(vec({1}), Sense::LessEqual, 1);
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
  LinearProgram q(2);
  q.bounds.pop_back();
  CHECK_THROWS_AS(solve(q), std::invalid_argument);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(RMatrix::Identity(2, 2)).empty());
  CHECK(nullspace(RMatrix::Zero(1, 2)).size() == 2);
  RMatrix m(1, 2);
  m << Rational(1), Rational(-1);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == vec({1, 1}));
}

TEST_CASE("nullspace spans the kernel of random integer matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 1 + trial % 4, cols = 2 + trial % 5;
    RMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
    auto basis = nullspace(m);
    CHECK(static_cast<Index>(basis.size()) + rank(m) == cols);
    for (const auto& v : basis) CHECK(RVector(m * v).isZero());
    if (!basis.empty()) {
      RMatrix stacked(cols, static_cast<Index>(basis.size()));
      for (std::size_t k = 0; k < basis.size(); ++k) stacked.col(static_cast<Index>(k)) = basis[k];
      CHECK(rank(stacked) == static_cast<Index>(basis.size()));
    }
    RVector b = m * RVector::Constant(cols, Rational(1));
    auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK(RVector(m * *x) == b);
  }
}

TEST_CASE("solve_linear reports inconsistency") {
  RMatrix m(2, 1);
  m << Rational(1), Rational(1);
  CHECK_FALSE(solve_linear(m, vec({1, 2})).has_value());
  CHECK(*solve_linear(m, vec({2, 2})) == vec({2}));
}

TEST_CASE("feasible_point examples") {
  LinearProgram a(1);
  a.add(vec({1}), Sense::Equal, 2);
  Feasibility fa = feasible_point(a);
  REQUIRE(fa.point.has_value());
  CHECK(*fa.point == vec({2}));
  CHECK_FALSE(fa.farkas.has_value());

  LinearProgram b(1);
  b.add(vec({1}), Sense::Equal, -2);
  Feasibility fb = feasible_point(b);
  CHECK_FALSE(fb.point.has_value());
  REQUIRE(fb.farkas.has_value());
  CHECK(lpsuite::farkas_ok(b, *fb.farkas));

  KPolytope k = build_K(table("h2_half"), FunctionOnH::indicator(2, 1));
  Feasibility fk = feasible_point(k.program());
  REQUIRE(fk.point.has_value());
  CHECK(lpsuite::feasible(k.program(), *fk.point));
  CHECK(*fk.point == rv({"1/2", "1"}));
}

TEST_CASE("random bounded LPs agree with vertex enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-4, 4), rhs(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const Index d = 2 + trial % 2;
    const int m = 2 + trial % 3;
    LinearProgram p(d);
    oracle::Dense a;
    oracle::Row b, c;
    for (Index j = 0; j < d; ++j) {
      p.objective(j) = coef(rng);
      c.push_back(p.objective(j));
    }
    for (int i = 0; i < m; ++i) {
      RVector row(d);
      oracle::Row orow;
      for (Index j = 0; j < d; ++j) {
        row(j) = coef(rng);
        orow.push_back(row(j));
      }
      // Some rows have a negative rhs, so some instances are infeasible.
      Rational r(rhs(rng) - 2);
      p.add(row, Sense::LessEqual, r);
      a.push_back(orow);
      b.push_back(r);
    }
    // Box 0 ≤ x ≤ 10 keeps every instance bounded.
    for (Index j = 0; j < d; ++j) {
      RVector e = RVector::Zero(d);
      e(j) = 1;
      p.add(e, Sense::LessEqual, 10);
      oracle::Row up(static_cast<std::size_t>(d), Rational(0)), down = up;
      up[static_cast<std::size_t>(j)] = 1;
      down[static_cast<std::size_t>(j)] = -1;
      a.push_back(up);
      b.push_back(10);
      a.push_back(down);
      b.push_back(0);
    }
    Outcome o = solve(p);
    auto best = oracle::max_by_vertex_enumeration(a, b, c);
    INFO("trial " << trial);
    if (!best) {
      CHECK(o.status == Status::Infeasible);
      CHECK(lpsuite::farkas_ok(p, o.dual));
    } else {
      REQUIRE(o.status == Status::Optimal);
      CHECK(o.value == *best);
      CHECK(lpsuite::strong_duality(p, o));
    }
    Outcome again = solve(p);
    CHECK(again.status == o.status);
    CHECK(again.point == o.point);
    CHECK(again.dual == o.dual);
  }
}

TEST_CASE("minimization over free variables with mixed senses") {
  // min x - y, x free, y ≥ 0, x + y ≥ 1, x - y ≤ 3, y ≤ 4, x ≥ -2 → x = -2, y = 4.
  LinearProgram p(2);
  p.direction = Direction::Minimize;
  p.bounds[0] = Bound::Free;
  p.objective = vec({1, -1});
  p.add(vec({1, 1}), Sense::GreaterEqual, 1)
      .add(vec({1, -1}), Sense::LessEqual, 3)
      .add(vec({0, 1}), Sense::LessEqual, 4)
      .add(vec({1, 0}), Sense::GreaterEqual, -2);
  Outcome o = solve(p);
  REQUIRE(o.status == Status::Optimal);
  CHECK(o.value == -6);
  CHECK(o.point == vec({-2, 4}));
  CHECK(lpsuite::strong_duality(p, o));
}
