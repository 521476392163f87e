#include "hypal/lp.hpp"

#include <stdexcept>

namespace hypal::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

// --- linear algebra ---------------------------------------------------------

RowEchelon row_reduce(RMatrix m) {
  RowEchelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      m.row(i) -= m.row(row) * factor;
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Index rank(const RMatrix& m) { return row_reduce(m).rank(); }

std::vector<RVector> nullspace(const RMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : e.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RVector> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RVector v = RVector::Zero(m.cols());
    v(free) = 1;
    for (Index r = 0; r < e.rank(); ++r) v(e.pivot_columns[static_cast<std::size_t>(r)]) = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve_linear(const RMatrix& m, const RVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  RMatrix augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m;
  augmented.col(m.cols()) = b;
  RowEchelon e = row_reduce(std::move(augmented));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  RVector x = RVector::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivot_columns[static_cast<std::size_t>(r)]) = e.reduced(r, m.cols());
  return x;
}

// --- verification -----------------------------------------------------------

namespace {

void check_dimensions(const LinearProgram& p) {
  const Index n = p.variables();
  if (static_cast<Index>(p.bounds.size()) != n)
    throw std::invalid_argument("linear program: " + std::to_string(p.bounds.size()) + " bounds for " +
                                std::to_string(n) + " variables");
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    if (p.constraints[i].coefficients.size() != n)
      throw std::invalid_argument("linear program: constraint " + std::to_string(i) + " has " +
                                  std::to_string(p.constraints[i].coefficients.size()) + " coefficients, expected " +
                                  std::to_string(n));
}

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

RVector transpose_times(const LinearProgram& p, const RVector& y) {
  RVector out = RVector::Zero(p.variables());
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    if (y(static_cast<Index>(i)) != 0) out += p.constraints[i].coefficients * y(static_cast<Index>(i));
  return out;
}

Rational rhs_dot(const LinearProgram& p, const RVector& y) {
  Rational s(0);
  for (std::size_t i = 0; i < p.constraints.size(); ++i) s += p.constraints[i].rhs * y(static_cast<Index>(i));
  return s;
}

// Sign y_i must have on row i for a Farkas / maximization dual: +1 means ≥ 0.
int row_sign(Sense s) {
  switch (s) {
    case Sense::LessEqual: return 1;
    case Sense::GreaterEqual: return -1;
    case Sense::Equal: return 0;
  }
  return 0;
}

bool sign_ok(const Rational& v, int required) {
  return required == 0 || (required > 0 ? v >= 0 : v <= 0);
}

}  // namespace

bool is_feasible(const LinearProgram& p, const RVector& x) {
  if (x.size() != p.variables()) return false;
  for (Index j = 0; j < x.size(); ++j)
    if (p.bounds[static_cast<std::size_t>(j)] == Bound::NonNegative && x(j) < 0) return false;
  for (const auto& c : p.constraints) {
    Rational lhs = c.coefficients.dot(x);
    if (c.sense == Sense::LessEqual && lhs > c.rhs) return false;
    if (c.sense == Sense::GreaterEqual && lhs < c.rhs) return false;
    if (c.sense == Sense::Equal && lhs != c.rhs) return false;
  }
  return true;
}

bool verify_outcome(const LinearProgram& p, const Outcome& o, std::string* why) {
  check_dimensions(p);
  const auto m = static_cast<Index>(p.constraints.size());
  const Index n = p.variables();
  switch (o.status) {
    case Status::Optimal: {
      if (!is_feasible(p, o.point)) return fail(why, "optimal point is infeasible");
      if (p.objective.dot(o.point) != o.value) return fail(why, "objective at point differs from value");
      if (o.dual.size() != m) return fail(why, "dual has wrong size");
      // Maximization dual in canonical signs; a minimization dual is its negation.
      const int flip = p.direction == Direction::Maximize ? 1 : -1;
      for (Index i = 0; i < m; ++i)
        if (!sign_ok(o.dual(i) * flip, row_sign(p.constraints[static_cast<std::size_t>(i)].sense)))
          return fail(why, "dual sign wrong on row " + std::to_string(i));
      RVector aty = transpose_times(p, o.dual);
      for (Index j = 0; j < n; ++j) {
        Rational slack = (aty(j) - p.objective(j)) * flip;
        if (p.bounds[static_cast<std::size_t>(j)] == Bound::Free ? slack != 0 : slack < 0)
          return fail(why, "dual infeasible on variable " + std::to_string(j));
      }
      if (rhs_dot(p, o.dual) != o.value) return fail(why, "strong duality violated");
      return true;
    }
    case Status::Infeasible: {
      if (o.dual.size() != m) return fail(why, "Farkas certificate has wrong size");
      for (Index i = 0; i < m; ++i)
        if (!sign_ok(o.dual(i), row_sign(p.constraints[static_cast<std::size_t>(i)].sense)))
          return fail(why, "Farkas sign wrong on row " + std::to_string(i));
      RVector aty = transpose_times(p, o.dual);
      for (Index j = 0; j < n; ++j) {
        if (p.bounds[static_cast<std::size_t>(j)] == Bound::Free ? aty(j) != 0 : aty(j) < 0)
          return fail(why, "Farkas combination has wrong sign on variable " + std::to_string(j));
      }
      if (rhs_dot(p, o.dual) >= 0) return fail(why, "Farkas combination of right-hand sides is not negative");
      return true;
    }
    case Status::Unbounded: {
      if (!is_feasible(p, o.point)) return fail(why, "unbounded: base point infeasible");
      if (o.ray.size() != n) return fail(why, "ray has wrong size");
      for (Index j = 0; j < n; ++j)
        if (p.bounds[static_cast<std::size_t>(j)] == Bound::NonNegative && o.ray(j) < 0)
          return fail(why, "ray leaves the nonnegative orthant");
      for (const auto& c : p.constraints) {
        Rational a = c.coefficients.dot(o.ray);
        if ((c.sense == Sense::LessEqual && a > 0) || (c.sense == Sense::GreaterEqual && a < 0) ||
            (c.sense == Sense::Equal && a != 0))
          return fail(why, "ray violates a constraint");
      }
      Rational gain = p.objective.dot(o.ray);
      if (p.direction == Direction::Maximize ? gain <= 0 : gain >= 0) return fail(why, "ray does not improve");
      return true;
    }
  }
  return false;
}

// --- simplex ------------------------------------------------------------------

namespace {

// Equality-form problem: maximize c·x̄, Ā x̄ = b̄ ≥ 0, x̄ ≥ 0.
// Column layout: structural (free variables split in two), slack/surplus, artificial.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& p) : program_(p) {
    const auto m = static_cast<Index>(p.constraints.size());
    const Index n = p.variables();
    for (Index j = 0; j < n; ++j) {
      structural_.push_back({j, 1});
      if (p.bounds[static_cast<std::size_t>(j)] == Bound::Free) structural_.push_back({j, -1});
    }
    row_sign_.assign(static_cast<std::size_t>(m), 1);
    std::vector<Sense> senses;
    for (Index i = 0; i < m; ++i) {
      const auto& c = p.constraints[static_cast<std::size_t>(i)];
      Sense s = c.sense;
      if (c.rhs < 0) {
        row_sign_[static_cast<std::size_t>(i)] = -1;
        if (s == Sense::LessEqual)
          s = Sense::GreaterEqual;
        else if (s == Sense::GreaterEqual)
          s = Sense::LessEqual;
      }
      senses.push_back(s);
    }
    Index slack_count = 0, artificial_count = 0;
    for (Sense s : senses) {
      if (s != Sense::Equal) ++slack_count;
      if (s != Sense::LessEqual) ++artificial_count;
    }
    const auto structural_count = static_cast<Index>(structural_.size());
    first_slack_ = structural_count;
    first_artificial_ = structural_count + slack_count;
    columns_ = first_artificial_ + artificial_count;

    a_ = RMatrix::Zero(m, columns_);
    b_ = RVector::Zero(m);
    basis_.assign(static_cast<std::size_t>(m), -1);
    Index slack = first_slack_, artificial = first_artificial_;
    for (Index i = 0; i < m; ++i) {
      const auto& c = p.constraints[static_cast<std::size_t>(i)];
      const Rational sign(row_sign_[static_cast<std::size_t>(i)]);
      for (Index k = 0; k < structural_count; ++k) {
        auto [var, dir] = structural_[static_cast<std::size_t>(k)];
        a_(i, k) = c.coefficients(var) * sign * Rational(dir);
      }
      b_(i) = c.rhs * sign;
      switch (senses[static_cast<std::size_t>(i)]) {
        case Sense::LessEqual:
          a_(i, slack) = 1;
          basis_[static_cast<std::size_t>(i)] = slack++;
          break;
        case Sense::GreaterEqual:
          a_(i, slack++) = -1;
          a_(i, artificial) = 1;
          basis_[static_cast<std::size_t>(i)] = artificial++;
          break;
        case Sense::Equal:
          a_(i, artificial) = 1;
          basis_[static_cast<std::size_t>(i)] = artificial++;
          break;
      }
    }
    t_.resize(m, columns_ + 1);
    t_.leftCols(columns_) = a_;
    t_.col(columns_) = b_;
  }

  Index rows() const { return t_.rows(); }
  bool has_artificials() const { return first_artificial_ < columns_; }
  bool is_artificial(Index col) const { return col >= first_artificial_; }

  RVector phase1_costs() const {
    RVector c = RVector::Zero(columns_);
    for (Index j = first_artificial_; j < columns_; ++j) c(j) = -1;
    return c;
  }

  RVector phase2_costs() const {
    RVector c = RVector::Zero(columns_);
    const Rational flip(program_.direction == Direction::Maximize ? 1 : -1);
    for (std::size_t k = 0; k < structural_.size(); ++k) {
      auto [var, dir] = structural_[k];
      c(static_cast<Index>(k)) = program_.objective(var) * Rational(dir) * flip;
    }
    return c;
  }

  // Runs Bland's-rule simplex. Returns -1 at optimality, otherwise the
  // entering column along which the objective is unbounded.
  Index optimize(const RVector& costs, bool allow_artificial) {
    for (;;) {
      Index entering = -1;
      for (Index j = 0; j < columns_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (in_basis(j)) continue;
        Rational reduced = costs(j);
        for (Index i = 0; i < rows(); ++i) reduced -= costs(basis_[static_cast<std::size_t>(i)]) * t_(i, j);
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return -1;
      Index leaving = -1;
      Rational best;
      for (Index i = 0; i < rows(); ++i) {
        if (t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, columns_) / t_(i, entering);
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return entering;
      pivot(leaving, entering);
    }
  }

  // Pivots zero-level artificials out of the basis where possible. Rows where
  // that is impossible are redundant and stay inert.
  void expel_artificials() {
    for (Index i = 0; i < rows(); ++i) {
      if (!is_artificial(basis_[static_cast<std::size_t>(i)])) continue;
      for (Index j = 0; j < first_artificial_; ++j)
        if (t_(i, j) != 0 && !in_basis(j)) {
          pivot(i, j);
          break;
        }
    }
  }

  Rational objective_value(const RVector& costs) const {
    Rational v(0);
    for (Index i = 0; i < rows(); ++i) v += costs(basis_[static_cast<std::size_t>(i)]) * t_(i, columns_);
    return v;
  }

  // Dual multipliers of the original rows: solves Bᵀȳ = c_B, then undoes the
  // row sign normalization.
  RVector duals(const RVector& costs) const {
    const Index m = rows();
    RMatrix basis_matrix(m, m);
    RVector cb(m);
    for (Index i = 0; i < m; ++i) {
      basis_matrix.col(i) = a_.col(basis_[static_cast<std::size_t>(i)]);
      cb(i) = costs(basis_[static_cast<std::size_t>(i)]);
    }
    auto y = solve_linear(basis_matrix.transpose(), cb);
    if (!y) throw std::logic_error("simplex: singular basis");
    for (Index i = 0; i < m; ++i) (*y)(i) *= Rational(row_sign_[static_cast<std::size_t>(i)]);
    return *y;
  }

  RVector primal() const {
    RVector x = RVector::Zero(program_.variables());
    for (Index i = 0; i < rows(); ++i) {
      Index col = basis_[static_cast<std::size_t>(i)];
      if (col < first_slack_) {
        auto [var, dir] = structural_[static_cast<std::size_t>(col)];
        x(var) += t_(i, columns_) * Rational(dir);
      }
    }
    return x;
  }

  RVector ray(Index entering) const {
    RVector full = RVector::Zero(columns_);
    full(entering) = 1;
    for (Index i = 0; i < rows(); ++i) full(basis_[static_cast<std::size_t>(i)]) = -t_(i, entering);
    RVector d = RVector::Zero(program_.variables());
    for (std::size_t k = 0; k < structural_.size(); ++k) {
      auto [var, dir] = structural_[k];
      d(var) += full(static_cast<Index>(k)) * Rational(dir);
    }
    return d;
  }

 private:
  bool in_basis(Index col) const {
    for (Index b : basis_)
      if (b == col) return true;
    return false;
  }

  void pivot(Index r, Index c) {
    const Rational inv = Rational(1) / t_(r, c);
    t_.row(r) *= inv;
    for (Index i = 0; i < rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational factor = t_(i, c);
      t_.row(i) -= t_.row(r) * factor;
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  const LinearProgram& program_;
  std::vector<std::pair<Index, int>> structural_;  // (variable, +1 | -1)
  std::vector<int> row_sign_;
  Index first_slack_ = 0, first_artificial_ = 0, columns_ = 0;
  RMatrix a_;
  RVector b_;
  RMatrix t_;
  std::vector<Index> basis_;
};

}  // namespace

Outcome solve(const LinearProgram& p) {
  check_dimensions(p);
  Tableau tab(p);
  Outcome out;
  bool infeasible = false;
  if (tab.has_artificials()) {
    RVector c1 = tab.phase1_costs();
    tab.optimize(c1, true);
    if (tab.objective_value(c1) < 0) {
      infeasible = true;
      out.status = Status::Infeasible;
      out.dual = tab.duals(c1);
    }
  }
  if (!infeasible) {
    tab.expel_artificials();
    RVector c2 = tab.phase2_costs();
    Index unbounded = tab.optimize(c2, false);
    out.point = tab.primal();
    if (unbounded >= 0) {
      out.status = Status::Unbounded;
      out.ray = tab.ray(unbounded);
    } else {
      out.status = Status::Optimal;
      out.value = p.objective.dot(out.point);
      RVector y = tab.duals(c2);
      if (p.direction == Direction::Minimize) y = -y;
      out.dual = std::move(y);
    }
  }
  std::string why;
  if (!verify_outcome(p, out, &why)) throw std::logic_error("simplex produced an invalid certificate: " + why);
  return out;
}

Feasibility feasible_point(const LinearProgram& p) {
  LinearProgram phase1 = p;
  phase1.direction = Direction::Maximize;
  phase1.objective = RVector::Zero(p.variables());
  Outcome o = solve(phase1);
  Feasibility f;
  if (o.status == Status::Infeasible)
    f.farkas = std::move(o.dual);
  else
    f.point = std::move(o.point);
  return f;
}

}  // namespace hypal::lp
