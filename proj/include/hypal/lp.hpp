#pragma once

// Exact rational linear programming and the small linear algebra kernel the
// decision procedures sit on. Dense, tiny problems only.

#include "hypal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypal::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };
enum class Direction { Maximize, Minimize };
enum class Bound { NonNegative, Free };

struct Constraint {
  RVector coefficients;
  Sense sense;
  Rational rhs;
};

struct LinearProgram {
  Direction direction = Direction::Maximize;
  RVector objective;
  std::vector<Constraint> constraints;
  std::vector<Bound> bounds;  // one per variable

  LinearProgram() = default;
  /// All variables nonnegative, zero objective, no constraints.
  explicit LinearProgram(Index variables)
      : objective(RVector::Zero(variables)), bounds(static_cast<std::size_t>(variables), Bound::NonNegative) {}

  Index variables() const { return objective.size(); }
  LinearProgram& add(RVector coefficients, Sense sense, Rational rhs) {
    constraints.push_back({std::move(coefficients), sense, std::move(rhs)});
    return *this;
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string to_string(Status s);

/// Result of solve(). Which fields are meaningful depends on status:
///  - Optimal: point, value, dual (b·dual == value, dual feasible).
///  - Infeasible: dual is a Farkas certificate y: y_i ≥ 0 on ≤ rows, ≤ 0 on
///    ≥ rows; Aᵀy ≥ 0 on nonnegative variables, = 0 on free ones; b·y < 0.
///  - Unbounded: point is feasible and ray is an improving direction.
///
/// Dual signs for an optimal maximization: y ≥ 0 on ≤ rows, y ≤ 0 on ≥ rows,
/// Aᵀy ≥ c on nonnegative variables. Minimization mirrors this.
struct Outcome {
  Status status = Status::Infeasible;
  RVector point;
  Rational value;
  RVector dual;
  RVector ray;
};

/// Two-phase simplex with Bland's rule. Deterministic. Every returned
/// certificate has already been checked by verify_outcome().
/// Throws std::invalid_argument on inconsistent dimensions.
Outcome solve(const LinearProgram& p);

/// Checks primal feasibility, certificate signs and the value identities exactly.
bool verify_outcome(const LinearProgram& p, const Outcome& o, std::string* why = nullptr);

/// Point satisfying every constraint and bound of p (objective ignored).
bool is_feasible(const LinearProgram& p, const RVector& x);

struct Feasibility {
  std::optional<RVector> point;
  std::optional<RVector> farkas;  // set iff point is empty
};

/// Phase-1 only: a feasible point or a Farkas certificate.
Feasibility feasible_point(const LinearProgram& p);

// --- linear algebra kernel -------------------------------------------------

struct RowEchelon {
  RMatrix reduced;
  std::vector<Index> pivot_columns;
  Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon row_reduce(RMatrix m);

Index rank(const RMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column, each with a 1 in its
/// free coordinate.
std::vector<RVector> nullspace(const RMatrix& m);

/// Some solution of m x = b (free coordinates set to 0), or nullopt.
std::optional<RVector> solve_linear(const RMatrix& m, const RVector& b);

}  // namespace hypal::lp
