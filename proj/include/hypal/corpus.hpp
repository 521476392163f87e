#pragma once

// Reference hypergroups: groups, class hypergroups of groups, the two-element
// family, and a couple of tables that deliberately break an axiom.

#include "hypal/amenability.hpp"
#include "hypal/core.hpp"

#include <string>
#include <vector>

namespace hypal {

/// A finite group by its Cayley table. Element 0 must be the identity.
class GroupTable {
 public:
  /// `product[x][y]` is the index of xy. Throws StructureError unless the
  /// table is a group with identity at index 0.
  GroupTable(std::string name, std::vector<std::string> elements, std::vector<std::vector<Index>> product);

  const std::string& name() const { return name_; }
  Index order() const { return static_cast<Index>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  Index multiply(Index x, Index y) const { return product_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  Index inverse(Index x) const { return inverse_[static_cast<std::size_t>(x)]; }

  /// Conjugacy classes ordered by their first element; each class lists its
  /// members in element order, so class 0 is {e}.
  std::vector<std::vector<Index>> conjugacy_classes() const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<Index>> product_;
  std::vector<Index> inverse_;
};

GroupTable cyclic_group(Index n);        // e, g, g2, ...
GroupTable symmetric_group_3();          // e, (12), (13), (23), (123), (132)
GroupTable dihedral_group_4();           // e, r2, r, r3, s, sr2, sr, sr3
GroupTable quaternion_group();           // 1, -1, i, -i, j, -j, k, -k

/// c[x][y][z] = [z = xy], involution = inverse.
FiniteHypergroup gen_group(const GroupTable& g);

/// Class hypergroup: elements are conjugacy classes (named by their first
/// member), c[i][j][k] = #{(g,h) ∈ C_i×C_j : gh ∈ C_k} / (|C_i||C_j|).
FiniteHypergroup gen_conjugacy(const GroupTable& g);

/// {e, a}, a∗a = α e + (1−α) a. α outside [0, 1] is an InputError; α = 0
/// fails the support axiom and throws StructureError.
FiniteHypergroup gen_order2(const Rational& alpha);

/// The same table without validation; α = 0 gives the support-axiom
/// violation used as a negative fixture. Requires 0 ≤ α ≤ 1.
ConvolutionTable order2_table(const Rational& alpha);

struct GoldenEntry {
  std::string file_stem;
  FiniteHypergroup hypergroup;
  Measure haar;  // λ_e = 1
  Mean mean;
};

struct NegativeFixture {
  std::string file_stem;
  ConvolutionTable table;
  Axiom failing;
  std::vector<Index> witness;
};

/// Z2, Z3, S3, S3c, H2(1/2), H2(1/4), D4c with their known Haar weights
/// (uniform for groups, class sizes for class hypergroups, (1, 1/α) for the
/// two-element family).
std::vector<GoldenEntry> golden_suite();

/// NoSupport (a∗a = a) and NonAssociative.
std::vector<NegativeFixture> negative_fixtures();

ConvolutionTable no_support_table();
ConvolutionTable non_associative_table();

}  // namespace hypal
