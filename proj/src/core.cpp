#include "hypal/core.hpp"

#include <algorithm>

namespace hypal {

ConvolutionTable::ConvolutionTable(std::string name, std::vector<std::string> elements,
                                   std::vector<Index> involution, std::vector<RMatrix> translations)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      involution_(std::move(involution)),
      slices_(std::move(translations)) {
  const auto n = static_cast<Index>(elements_.size());
  if (n == 0) throw StructureError("a hypergroup needs at least one element");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty()) throw StructureError("empty element symbol");
    for (std::size_t j = 0; j < i; ++j)
      if (elements_[i] == elements_[j]) throw StructureError("duplicate element \"" + elements_[i] + "\"");
  }
  if (static_cast<Index>(involution_.size()) != n)
    throw StructureError("involution has " + std::to_string(involution_.size()) + " entries, expected " +
                         std::to_string(n));
  std::vector<bool> hit(elements_.size(), false);
  for (Index x = 0; x < n; ++x) {
    Index s = involution_[static_cast<std::size_t>(x)];
    if (s < 0 || s >= n) throw StructureError("involution maps " + elements_[x] + " outside the element set");
    if (hit[static_cast<std::size_t>(s)]) throw StructureError("involution is not a permutation");
    hit[static_cast<std::size_t>(s)] = true;
  }
  for (Index x = 0; x < n; ++x)
    if (involution_[static_cast<std::size_t>(involution_[static_cast<std::size_t>(x)])] != x)
      throw StructureError("involution is not self-inverse at " + elements_[x]);
  if (static_cast<Index>(slices_.size()) != n)
    throw StructureError("convolution tensor has " + std::to_string(slices_.size()) + " slices, expected " +
                         std::to_string(n));
  for (Index x = 0; x < n; ++x) {
    const RMatrix& s = slices_[static_cast<std::size_t>(x)];
    if (s.rows() != n || s.cols() != n) throw StructureError("convolution slice " + elements_[x] + " has wrong shape");
    for (Index y = 0; y < n; ++y) {
      Rational sum(0);
      for (Index z = 0; z < n; ++z) {
        if (s(z, y) < 0)
          throw StructureError("negative structure constant c[" + elements_[x] + "][" + elements_[y] + "][" +
                               elements_[z] + "]");
        sum += s(z, y);
      }
      if (sum != 1)
        throw StructureError("δ_" + elements_[x] + "∗δ_" + elements_[y] + " has total mass " + to_string(sum) +
                             ", expected 1");
    }
  }
}

Index ConvolutionTable::index_of(const std::string& symbol) const {
  auto it = std::find(elements_.begin(), elements_.end(), symbol);
  if (it == elements_.end()) throw UnknownElement(symbol);
  return static_cast<Index>(it - elements_.begin());
}

bool operator==(const ConvolutionTable& a, const ConvolutionTable& b) {
  if (a.name_ != b.name_ || a.elements_ != b.elements_ || a.involution_ != b.involution_) return false;
  for (std::size_t x = 0; x < a.slices_.size(); ++x)
    if (a.slices_[x] != b.slices_[x]) return false;
  return true;
}

std::string axiom_id(Axiom a) {
  switch (a) {
    case Axiom::Associativity: return "A";
    case Axiom::ProbabilityRows: return "B";
    case Axiom::ConvolutionContinuity: return "3";
    case Axiom::SupportContinuity: return "4";
    case Axiom::Identity: return "C";
    case Axiom::Involution: return "D";
    case Axiom::SupportOfIdentity: return "E";
  }
  return "?";
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Associativity: return "associativity";
    case Axiom::ProbabilityRows: return "probability rows";
    case Axiom::ConvolutionContinuity: return "continuity of convolution";
    case Axiom::SupportContinuity: return "continuity of support";
    case Axiom::Identity: return "identity";
    case Axiom::Involution: return "involution anti-homomorphism";
    case Axiom::SupportOfIdentity: return "identity in support iff involution";
  }
  return "?";
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& ValidationReport::check(Axiom a) const {
  for (const auto& c : checks)
    if (c.axiom == a) return c;
  throw std::out_of_range("axiom not in report");
}

namespace {

AxiomCheck check_associativity(const ConvolutionTable& t) {
  const Index n = t.size();
  AxiomCheck out{Axiom::Associativity};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index v = 0; v < n; ++v) {
          Rational lhs(0), rhs(0);
          for (Index w = 0; w < n; ++w) {
            lhs += t(x, y, w) * t(w, z, v);
            rhs += t(y, z, w) * t(x, w, v);
          }
          if (lhs != rhs) {
            out.passed = false;
            out.witness = Witness{{x, y, z, v}, lhs, rhs, "==",
                                  "((δ_x∗δ_y)∗δ_z)({v}) != (δ_x∗(δ_y∗δ_z))({v})"};
            return out;
          }
        }
  return out;
}

AxiomCheck check_probability(const ConvolutionTable& t) {
  const Index n = t.size();
  AxiomCheck out{Axiom::ProbabilityRows};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Rational sum(0);
      for (Index z = 0; z < n; ++z) {
        if (t(x, y, z) < 0) {
          out.passed = false;
          out.witness = Witness{{x, y, z}, t(x, y, z), Rational(0), ">=", "negative structure constant"};
          return out;
        }
        sum += t(x, y, z);
      }
      if (sum != 1) {
        out.passed = false;
        out.witness = Witness{{x, y}, sum, Rational(1), "==", "total mass of δ_x∗δ_y"};
        return out;
      }
    }
  return out;
}

bool acts_as_identity(const ConvolutionTable& t, Index u, std::optional<Witness>* witness) {
  const Index n = t.size();
  for (Index y = 0; y < n; ++y)
    for (Index z = 0; z < n; ++z) {
      Rational expected(y == z ? 1 : 0);
      if (t(u, y, z) != expected) {
        if (witness) *witness = Witness{{u, y, z}, t(u, y, z), expected, "==", "c[e][y][z] must equal [y=z]"};
        return false;
      }
      if (t(y, u, z) != expected) {
        if (witness) *witness = Witness{{y, u, z}, t(y, u, z), expected, "==", "c[x][e][z] must equal [x=z]"};
        return false;
      }
    }
  return true;
}

AxiomCheck check_identity(const ConvolutionTable& t) {
  AxiomCheck out{Axiom::Identity};
  if (!acts_as_identity(t, 0, &out.witness)) {
    out.passed = false;
    return out;
  }
  for (Index u = 1; u < t.size(); ++u)
    if (acts_as_identity(t, u, nullptr)) {
      out.passed = false;
      out.witness = Witness{{u}, Rational(u), Rational(0), "==", "a second element acts as identity"};
      return out;
    }
  return out;
}

AxiomCheck check_involution(const ConvolutionTable& t) {
  const Index n = t.size();
  AxiomCheck out{Axiom::Involution};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        const Rational& lhs = t(x, y, z);
        const Rational& rhs = t(t.involution(y), t.involution(x), t.involution(z));
        if (lhs != rhs) {
          out.passed = false;
          out.witness = Witness{{x, y, z}, lhs, rhs, "==", "c[x][y][z] != c[σy][σx][σz]"};
          return out;
        }
      }
  return out;
}

AxiomCheck check_support_of_identity(const ConvolutionTable& t) {
  const Index n = t.size();
  AxiomCheck out{Axiom::SupportOfIdentity};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Rational& value = t(x, y, 0);
      bool inverse_pair = y == t.involution(x);
      if (inverse_pair && value == 0) {
        out.passed = false;
        out.witness = Witness{{x, y}, value, Rational(0), ">", "y = σ(x) but e is not in supp(δ_x∗δ_y)"};
        return out;
      }
      if (!inverse_pair && value != 0) {
        out.passed = false;
        out.witness = Witness{{x, y}, value, Rational(0), "==", "e is in supp(δ_x∗δ_y) but y != σ(x)"};
        return out;
      }
    }
  return out;
}

}  // namespace

Validation validate_table(const ConvolutionTable& t) {
  Validation v;
  v.report.table_name = t.name();
  v.report.checks.push_back(check_associativity(t));
  v.report.checks.push_back(check_probability(t));
  v.report.checks.push_back(AxiomCheck{Axiom::ConvolutionContinuity, true, true, std::nullopt});
  v.report.checks.push_back(AxiomCheck{Axiom::SupportContinuity, true, true, std::nullopt});
  v.report.checks.push_back(check_identity(t));
  v.report.checks.push_back(check_involution(t));
  v.report.checks.push_back(check_support_of_identity(t));
  if (v.report.valid()) v.hypergroup = FiniteHypergroup(t);
  return v;
}

FiniteHypergroup require_hypergroup(const ConvolutionTable& t) {
  Validation v = validate_table(t);
  if (v.hypergroup) return *std::move(v.hypergroup);
  for (const auto& c : v.report.checks)
    if (!c.passed)
      throw StructureError("table \"" + t.name() + "\" fails axiom (" + axiom_id(c.axiom) + ") " +
                           axiom_name(c.axiom));
  throw StructureError("table \"" + t.name() + "\" is not a hypergroup");
}

Measure convolve_points(const ConvolutionTable& t, Index x, Index y) {
  return Measure(RVector(t.left(x).col(y)));
}

std::vector<Index> support(const ConvolutionTable& t, Index x, Index y) {
  std::vector<Index> out;
  for (Index z = 0; z < t.size(); ++z)
    if (t(x, y, z) > 0) out.push_back(z);
  return out;
}

}  // namespace hypal
