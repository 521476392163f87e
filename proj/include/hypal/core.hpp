#pragma once

#include "hypal/error.hpp"
#include "hypal/measure.hpp"
#include "hypal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypal {

/// Structure constants c[x][y][z] = (δ_x∗δ_y)({z}) of a finite hypergroup
/// candidate. Element 0 is the designated identity.
///
/// Construction enforces the structural invariants only: a complete tensor,
/// an involutive permutation, nonnegative entries and probability rows.
/// Whether the table is a hypergroup is decided by validate_table().
class ConvolutionTable {
 public:
  /// `translations[x](z, y) == c[x][y][z]`, i.e. column y of slice x is the
  /// distribution δ_x∗δ_y. Throws StructureError.
  ConvolutionTable(std::string name, std::vector<std::string> elements,
                   std::vector<Index> involution, std::vector<RMatrix> translations);

  const std::string& name() const { return name_; }
  Index size() const { return static_cast<Index>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& symbol(Index x) const { return elements_.at(static_cast<std::size_t>(x)); }
  Index index_of(const std::string& symbol) const;

  Index involution(Index x) const { return involution_[static_cast<std::size_t>(x)]; }
  const std::vector<Index>& involution() const { return involution_; }

  const Rational& operator()(Index x, Index y, Index z) const {
    return slices_[static_cast<std::size_t>(x)](z, y);
  }

  /// Left multiplication by δ_x on measures: (δ_x∗ν) = left(x) * ν.
  const RMatrix& left(Index x) const { return slices_[static_cast<std::size_t>(x)]; }

  template <class Scalar>
  Matrix<Scalar> left_as(Index x) const {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return left(x);
    else
      return left(x).template cast<Scalar>();
  }

  void rename(std::string name) { name_ = std::move(name); }

  friend bool operator==(const ConvolutionTable& a, const ConvolutionTable& b);

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<Index> involution_;
  std::vector<RMatrix> slices_;
};

/// The axiom labels of a hypergroup, finite-case form.
enum class Axiom {
  Associativity,       // (A), axiom 1
  ProbabilityRows,     // (B), axiom 2
  ConvolutionContinuity,  // axiom 3, automatic
  SupportContinuity,   // axiom 4, automatic
  Identity,            // (C), axiom 5
  Involution,          // (D), axiom 6
  SupportOfIdentity,   // (E), axiom 7
};

std::string axiom_id(Axiom a);    // "A", "B", "3", "4", "C", "D", "E"
std::string axiom_name(Axiom a);

/// First offending index tuple (lexicographic) and the two values compared.
struct Witness {
  std::vector<Index> indices;
  Rational lhs;
  Rational rhs;
  std::string relation;  // what was required of lhs and rhs, e.g. "==" or ">"
  std::string detail;
};

struct AxiomCheck {
  Axiom axiom;
  bool passed = true;
  bool automatic = false;
  std::optional<Witness> witness;
};

struct ValidationReport {
  std::string table_name;
  std::vector<AxiomCheck> checks;

  bool valid() const;
  const AxiomCheck& check(Axiom a) const;
};

struct Validation;

/// A table that passed every axiom check. Immutable.
class FiniteHypergroup {
 public:
  const ConvolutionTable& table() const { return table_; }
  operator const ConvolutionTable&() const { return table_; }

  Index size() const { return table_.size(); }
  const std::string& name() const { return table_.name(); }
  Index index_of(const std::string& s) const { return table_.index_of(s); }

 private:
  explicit FiniteHypergroup(ConvolutionTable t) : table_(std::move(t)) {}
  friend Validation validate_table(const ConvolutionTable&);
  ConvolutionTable table_;
};

struct Validation {
  ValidationReport report;
  std::optional<FiniteHypergroup> hypergroup;
};

Validation validate_table(const ConvolutionTable& t);

/// Convenience: validate and return the hypergroup, or throw StructureError
/// naming the first failing axiom.
FiniteHypergroup require_hypergroup(const ConvolutionTable& t);

/// δ_x∗δ_y, the probability measure z ↦ c[x][y][z].
Measure convolve_points(const ConvolutionTable& t, Index x, Index y);

/// {z : c[x][y][z] > 0}, ascending.
std::vector<Index> support(const ConvolutionTable& t, Index x, Index y);

}  // namespace hypal
