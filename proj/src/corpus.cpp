#include "hypal/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hypal {

GroupTable::GroupTable(std::string name, std::vector<std::string> elements,
                       std::vector<std::vector<Index>> product)
    : name_(std::move(name)), elements_(std::move(elements)), product_(std::move(product)) {
  const Index n = order();
  if (n == 0) throw StructureError("group \"" + name_ + "\" has no elements");
  if (static_cast<Index>(product_.size()) != n) throw StructureError("Cayley table has the wrong number of rows");
  for (const auto& row : product_) {
    if (static_cast<Index>(row.size()) != n) throw StructureError("Cayley table row has the wrong length");
    for (Index v : row)
      if (v < 0 || v >= n) throw StructureError("Cayley table entry out of range");
  }
  for (Index x = 0; x < n; ++x)
    if (multiply(0, x) != x || multiply(x, 0) != x)
      throw StructureError("element 0 of group \"" + name_ + "\" is not the identity");
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
          throw StructureError("Cayley table of \"" + name_ + "\" is not associative at (" + elements_[x] + ", " +
                               elements_[y] + ", " + elements_[z] + ")");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y)
      if (multiply(x, y) == 0 && multiply(y, x) == 0) inverse_[static_cast<std::size_t>(x)] = y;
    if (inverse_[static_cast<std::size_t>(x)] < 0)
      throw StructureError("element " + elements_[x] + " has no inverse");
  }
}

std::vector<std::vector<Index>> GroupTable::conjugacy_classes() const {
  const Index n = order();
  std::vector<Index> class_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < n; ++x) {
    if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const auto id = static_cast<Index>(classes.size());
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (Index g = 0; g < n; ++g) member[static_cast<std::size_t>(multiply(multiply(g, x), inverse(g)))] = true;
    std::vector<Index> cls;
    for (Index y = 0; y < n; ++y)
      if (member[static_cast<std::size_t>(y)]) {
        cls.push_back(y);
        class_of[static_cast<std::size_t>(y)] = id;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

using Permutation = std::vector<int>;

// Group generated from explicit permutations, composed as (xy)(i) = x(y(i)).
GroupTable permutation_group(std::string name, std::vector<std::pair<std::string, Permutation>> members) {
  std::map<Permutation, Index> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i].second] = static_cast<Index>(i);
  std::vector<std::vector<Index>> product(members.size(), std::vector<Index>(members.size()));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < members.size(); ++x) {
    names.push_back(members[x].first);
    for (std::size_t y = 0; y < members.size(); ++y) {
      const Permutation& a = members[x].second;
      const Permutation& b = members[y].second;
      Permutation c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
      auto it = index.find(c);
      if (it == index.end()) throw StructureError("permutation set of \"" + name + "\" is not closed");
      product[x][y] = it->second;
    }
  }
  return GroupTable(std::move(name), std::move(names), std::move(product));
}

}  // namespace

GroupTable cyclic_group(Index n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (Index k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
  std::vector<std::vector<Index>> product(static_cast<std::size_t>(n), std::vector<Index>(static_cast<std::size_t>(n)));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) product[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  return GroupTable("Z" + std::to_string(n), std::move(names), std::move(product));
}

GroupTable symmetric_group_3() {
  return permutation_group("S3", {{"e", {0, 1, 2}},
                                  {"(12)", {1, 0, 2}},
                                  {"(13)", {2, 1, 0}},
                                  {"(23)", {0, 2, 1}},
                                  {"(123)", {1, 2, 0}},
                                  {"(132)", {2, 0, 1}}});
}

GroupTable dihedral_group_4() {
  // Symmetries of a square with vertices 0..3; r rotates, s reflects.
  return permutation_group("D4", {{"e", {0, 1, 2, 3}},
                                  {"r2", {2, 3, 0, 1}},
                                  {"r", {1, 2, 3, 0}},
                                  {"r3", {3, 0, 1, 2}},
                                  {"s", {0, 3, 2, 1}},
                                  {"sr2", {2, 1, 0, 3}},
                                  {"sr", {3, 2, 1, 0}},
                                  {"sr3", {1, 0, 3, 2}}});
}

GroupTable quaternion_group() {
  // Unit quaternions as (sign, unit) with unit ∈ {1, i, j, k}.
  const std::array<std::string, 8> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products: table[a][b] = (sign, unit)
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Index>> product(8, std::vector<Index>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[ux][uy];
      product[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * unit[ux][uy] + (s < 0 ? 1 : 0);
    }
  return GroupTable("Q8", std::vector<std::string>(names.begin(), names.end()), std::move(product));
}

FiniteHypergroup gen_group(const GroupTable& g) {
  const Index n = g.order();
  std::vector<RMatrix> slices(static_cast<std::size_t>(n), RMatrix::Zero(n, n));
  std::vector<Index> involution;
  for (Index x = 0; x < n; ++x) {
    involution.push_back(g.inverse(x));
    for (Index y = 0; y < n; ++y) slices[static_cast<std::size_t>(x)](g.multiply(x, y), y) = 1;
  }
  return require_hypergroup(ConvolutionTable(g.name(), g.elements(), std::move(involution), std::move(slices)));
}

FiniteHypergroup gen_conjugacy(const GroupTable& g) {
  const auto classes = g.conjugacy_classes();
  const auto m = static_cast<Index>(classes.size());
  std::vector<Index> class_of(static_cast<std::size_t>(g.order()));
  for (Index c = 0; c < m; ++c)
    for (Index x : classes[static_cast<std::size_t>(c)]) class_of[static_cast<std::size_t>(x)] = c;

  std::vector<std::string> names;
  std::vector<Index> involution;
  for (const auto& cls : classes) {
    names.push_back(g.elements()[static_cast<std::size_t>(cls.front())]);
    involution.push_back(class_of[static_cast<std::size_t>(g.inverse(cls.front()))]);
  }
  std::vector<RMatrix> slices(static_cast<std::size_t>(m), RMatrix::Zero(m, m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const auto& ci = classes[static_cast<std::size_t>(i)];
      const auto& cj = classes[static_cast<std::size_t>(j)];
      std::vector<Index> hits(static_cast<std::size_t>(m), 0);
      for (Index a : ci)
        for (Index b : cj) ++hits[static_cast<std::size_t>(class_of[static_cast<std::size_t>(g.multiply(a, b))])];
      const Rational pairs(static_cast<long>(ci.size() * cj.size()));
      for (Index k = 0; k < m; ++k)
        slices[static_cast<std::size_t>(i)](k, j) = Rational(static_cast<long>(hits[static_cast<std::size_t>(k)])) / pairs;
    }
  return require_hypergroup(
      ConvolutionTable(g.name() + "c", std::move(names), std::move(involution), std::move(slices)));
}

ConvolutionTable order2_table(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InputError("alpha must lie in [0, 1], got " + to_string(alpha));
  std::vector<RMatrix> slices(2, RMatrix::Zero(2, 2));
  slices[0] = RMatrix::Identity(2, 2);
  slices[1](1, 0) = 1;              // a∗e = a
  slices[1](0, 1) = alpha;          // a∗a at e
  slices[1](1, 1) = Rational(1) - alpha;
  return ConvolutionTable("H2(" + to_string(alpha) + ")", {"e", "a"}, {0, 1}, std::move(slices));
}

FiniteHypergroup gen_order2(const Rational& alpha) {
  return require_hypergroup(order2_table(alpha));
}

ConvolutionTable no_support_table() {
  ConvolutionTable t = order2_table(Rational(0));
  t.rename("NoSupport");
  return t;
}

ConvolutionTable non_associative_table() {
  // σ = id, a∗a = b∗b = e, a∗b = b∗a = (a + b)/2; (a∗a)∗b = b but a∗(a∗b) ≠ b.
  const Rational half(1, 2);
  std::vector<RMatrix> slices(3, RMatrix::Zero(3, 3));
  slices[0] = RMatrix::Identity(3, 3);
  slices[1](1, 0) = 1;
  slices[1](0, 1) = 1;
  slices[1](1, 2) = half;
  slices[1](2, 2) = half;
  slices[2](2, 0) = 1;
  slices[2](1, 1) = half;
  slices[2](2, 1) = half;
  slices[2](0, 2) = 1;
  return ConvolutionTable("NonAssociative", {"e", "a", "b"}, {0, 1, 2}, std::move(slices));
}

namespace {

Measure weights(std::initializer_list<long> values) {
  RVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Rational(x);
  return Measure(std::move(v));
}

GoldenEntry entry(std::string stem, FiniteHypergroup h, Measure haar) {
  Mean mean{Measure(RVector(haar.weights / haar.mass()))};
  return GoldenEntry{std::move(stem), std::move(h), std::move(haar), std::move(mean)};
}

FiniteHypergroup renamed(const FiniteHypergroup& h, const std::string& name,
                         const std::vector<std::string>& symbols) {
  const ConvolutionTable& t = h.table();
  std::vector<RMatrix> slices;
  for (Index x = 0; x < t.size(); ++x) slices.push_back(t.left(x));
  return require_hypergroup(ConvolutionTable(name, symbols, t.involution(), std::move(slices)));
}

}  // namespace

std::vector<GoldenEntry> golden_suite() {
  std::vector<GoldenEntry> out;
  FiniteHypergroup z2 = gen_group(cyclic_group(2));
  out.push_back(entry("z2", renamed(z2, "Z2", {"e", "a"}), weights({1, 1})));
  out.push_back(entry("z3", gen_group(cyclic_group(3)), weights({1, 1, 1})));
  out.push_back(entry("s3", gen_group(symmetric_group_3()), weights({1, 1, 1, 1, 1, 1})));
  out.push_back(entry("s3c", renamed(gen_conjugacy(symmetric_group_3()), "S3c", {"e", "t", "c"}),
                      weights({1, 3, 2})));
  out.push_back(entry("h2_half", gen_order2(Rational(1, 2)), weights({1, 2})));
  out.push_back(entry("h2_quarter", gen_order2(Rational(1, 4)), weights({1, 4})));
  out.push_back(entry("d4c", gen_conjugacy(dihedral_group_4()), weights({1, 1, 2, 2, 2})));
  return out;
}

std::vector<NegativeFixture> negative_fixtures() {
  return {NegativeFixture{"nosupport", no_support_table(), Axiom::SupportOfIdentity, {1, 1}},
          NegativeFixture{"nonassoc", non_associative_table(), Axiom::Associativity, {}}};
}

}  // namespace hypal
