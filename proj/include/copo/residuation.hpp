#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "copo/poset.hpp"
#include "copo/report.hpp"

namespace copo {

/// The two families of set-valued conjunction and implication.
///
/// Meet:   x (.) y = {0} if x <= y', else max L(x,y);
///         x -> y  = {1} if x <= y,  else min U(x',y).
/// Nested: x (.) y = {0} if x <= y', else max L(U(x,y'),y);
///         x -> y  = {1} if x <= y,  else min U(x',L(x,y)).
///
/// A variant always pairs its own (.) with its own ->.
enum class OperatorVariant { Meet, Nested };

std::string_view to_string(OperatorVariant v);
/// Accepts "meet" / "13" and "nested" / "14".
std::optional<OperatorVariant> parse_variant(std::string_view s);

/// Both throw NoInvolution / NotAntitone.
ElementSet odot(const Poset& p, OperatorVariant v, Element x, Element y);
ElementSet arrow(const Poset& p, OperatorVariant v, Element x, Element y);

/// odot and arrow over all of P x P, row-major.
struct ResiduationTables {
  OperatorVariant variant;
  std::size_t n;
  std::vector<ElementSet> odot;
  std::vector<ElementSet> arrow;

  const ElementSet& conj(Element x, Element y) const { return odot[x * n + y]; }
  const ElementSet& impl(Element x, Element y) const { return arrow[x * n + y]; }
};

ResiduationTables build_tables(const Poset& p, OperatorVariant v);

/// x (.) y <= z iff x <= y -> z, in the set-extended order, for all
/// triples. Witness (x, y, z) with both sets as evidence.
CheckReport check_adjointness(const Poset& p, const ResiduationTables& t);
/// x (.) y = y (.) x for all pairs.
CheckReport check_commutativity(const ResiduationTables& t);
/// x (.) 1 = 1 (.) x = {x} for all x.
CheckReport check_unit(const Poset& p, const ResiduationTables& t);

/// Checks the residuation conclusions on one poset.
///
/// Meet requires a distributive consistent poset and concludes
/// commutativity, unit and adjointness. Nested requires a strongly modular
/// consistent poset and concludes unit and adjointness; commutativity is
/// measured and reported but not required.
struct ResiduationCertificate {
  OperatorVariant variant;
  /// Holds when every conclusion verified; NotApplicable names the failed
  /// hypothesis in `note`; Fails when a hypothesis holds but a conclusion
  /// does not.
  CheckReport verdict;
  std::vector<CheckReport> hypotheses;
  CheckReport unit;
  CheckReport commutativity;
  CheckReport adjointness;
  std::size_t triples_checked = 0;
};

ResiduationCertificate certify_residuation(const Poset& p, OperatorVariant v);

} // namespace copo
