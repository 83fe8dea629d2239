#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copo/poset.hpp"
#include "copo/properties.hpp"
#include "copo/report.hpp"

namespace copo {

enum class BuiltinId { Fig1, Fig2, Fig3, B4, C5, C2 };

inline constexpr std::array kAllBuiltins = {BuiltinId::Fig1, BuiltinId::Fig2, BuiltinId::Fig3,
                                            BuiltinId::B4,   BuiltinId::C5,   BuiltinId::C2};

/// "fig1", "b4", ...
std::string_view to_string(BuiltinId id);
std::optional<BuiltinId> parse_builtin(std::string_view s);

/// The checked-in JSON document, embedded at build time.
std::string_view builtin_document(BuiltinId id);
Poset builtin(BuiltinId id);

inline constexpr std::size_t kDefaultMaxSize = 8;
/// Absolute limit for isomorphism-reduced enumeration.
inline constexpr std::size_t kHardMaxSize = 11;
/// Limit when every labeling is produced.
inline constexpr std::size_t kLabeledMaxSize = 7;

struct EnumerationQuery {
  std::size_t max_size = kDefaultMaxSize;
  std::size_t min_size = 2;
  std::vector<PropertyId> require;
  std::vector<PropertyId> forbid;
  /// One representative per isomorphism class (isomorphisms commute with the
  /// involution). When false, every labeling of the inner elements is
  /// produced; 0 and 1 stay fixed.
  bool up_to_iso = true;
  /// Needed for max_size above kDefaultMaxSize.
  bool allow_large = false;
};

/// Throws BudgetExceeded if the query is out of bounds.
void validate_query(const EnumerationQuery& q);

/// Streams every bounded poset with every antitone involution, ascending by
/// size, passing the property filters. Deterministic order. The callback
/// returns false to stop early. Returns the number of structures yielded.
/// Inner elements are named a, b, c, ... with partners primed: "b" and
/// "b'".
std::size_t enumerate(const EnumerationQuery& q, const std::function<bool(const Poset&)>& yield);
std::vector<Poset> enumerate_all(const EnumerationQuery& q);

/// Bounded posets without an involution, one per isomorphism class. Only
/// order properties may appear in the filters. Same limits.
std::size_t enumerate_bounded_posets(const EnumerationQuery& q, const std::function<bool(const Poset&)>& yield);

/// Unlabeled posets on n elements (no bounds added), one per isomorphism
/// class, given as down-set matrices.
std::vector<std::vector<ElementSet>> unlabeled_posets(std::size_t n);

/// Minimal encoding of the order relation and the involution (if any) over
/// all relabelings. Two structures are isomorphic iff their encodings are
/// equal.
std::vector<std::uint8_t> canonical_form(const Poset& p);
/// The structure relabeled into its canonical order.
Poset canonical_poset(const Poset& p);

/// All antitone involutions of the order, in lexicographic order of the
/// image vector.
std::vector<std::vector<Element>> antitone_involutions(const Poset& p);

enum class SweepCheck {
  ConsistencyOverDirectoids,   ///< every assigned directoid agrees with is_consistent
  DistributivityOverDirectoids,///< every assigned directoid agrees with is_distributive
  ResiduationMeet,             ///< certify_residuation never fails outright
  ResiduationNested,
  CompletionConsistency,
  ClosedSetsOracle,            ///< intersection closure equals the subset scan
  StrongImpliesModular,
  DistributiveImpliesModular,
  DisjointPairComplements,     ///< on distributive members
  StructuralIffConsistent,     ///< members with at least 3 elements
  DistributivityForms,         ///< the four forms agree
};

inline constexpr std::array kAllSweepChecks = {
    SweepCheck::ConsistencyOverDirectoids, SweepCheck::DistributivityOverDirectoids, SweepCheck::ResiduationMeet,
    SweepCheck::ResiduationNested,         SweepCheck::CompletionConsistency,        SweepCheck::ClosedSetsOracle,
    SweepCheck::StrongImpliesModular,      SweepCheck::DistributiveImpliesModular,   SweepCheck::DisjointPairComplements,
    SweepCheck::StructuralIffConsistent,   SweepCheck::DistributivityForms,
};

std::string_view to_string(SweepCheck c);
std::optional<SweepCheck> parse_sweep_check(std::string_view s);

/// Runs one check on one structure. NotApplicable when the structure is
/// outside the check's scope.
CheckReport run_sweep_check(const Poset& p, SweepCheck c);

struct SweepViolation {
  SweepCheck check;
  Poset poset;
  CheckReport report;
};

struct SweepTally {
  SweepCheck check;
  std::size_t applicable = 0;
  std::size_t violations = 0;
};

struct SweepReport {
  std::size_t structures = 0;
  std::vector<SweepTally> tallies;
  /// At most `max_kept` per check.
  std::vector<SweepViolation> violations;

  std::size_t total_violations() const;
};

SweepReport sweep(const EnumerationQuery& q, const std::vector<SweepCheck>& checks, std::size_t max_kept = 5);
/// Same checks over a given list (builtins, say).
SweepReport sweep(const std::vector<Poset>& corpus, const std::vector<SweepCheck>& checks, std::size_t max_kept = 5);

struct SearchResult {
  std::optional<Poset> witness;
  /// Largest size fully searched.
  std::size_t bound_reached = 0;
  std::size_t examined = 0;
};

/// Smallest structure meeting the filters. With `with_involution` false the
/// search runs over bare bounded posets.
SearchResult search_first(const EnumerationQuery& q, bool with_involution = true);

} // namespace copo
