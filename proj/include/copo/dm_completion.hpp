#pragma once

#include <string>
#include <vector>

#include "copo/poset.hpp"
#include "copo/report.hpp"

namespace copo {

/// Dedekind-MacNeille completion of a poset with antitone involution.
///
/// Closed sets are the sets L(A), A a subset of P, ordered by inclusion and
/// stored sorted by (cardinality, bitmask) so that indices are stable.
/// Closed sets are referred to by index everywhere below.
struct DMLattice {
  std::vector<ElementSet> closed_sets;
  /// C* = L(C')
  std::vector<std::size_t> star;
  /// x -> index of L(x)
  std::vector<std::size_t> embed_map;

  std::size_t size() const { return closed_sets.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return closed_sets.size() - 1; }
  bool leq(std::size_t a, std::size_t b) const { return closed_sets[a].is_subset_of(closed_sets[b]); }
  /// Throws std::out_of_range if `s` is not closed.
  std::size_t index_of(const ElementSet& s) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
};

/// All L(A), generated as intersections of principal ideals seeded with the
/// whole universe. Sorted by (cardinality, bitmask).
std::vector<ElementSet> dm_closed_sets(const Poset& p);

/// Same family, found by scanning every subset A for LU(A) = A. Exponential;
/// throws TooLarge above 20 elements.
std::vector<ElementSet> dm_closed_sets_by_fixpoint(const Poset& p);

/// Throws NoInvolution / NotAntitone. Validates the lattice invariants and
/// throws std::logic_error if one fails.
DMLattice dm_lattice(const Poset& p);

/// LU(C u D), the least closed set containing both.
std::size_t dm_join(const Poset& p, const DMLattice& l, std::size_t a, std::size_t b);

/// L(x), the image of x in the completion.
ElementSet embed(const Poset& p, Element x);

/// Fixpoint law, star an antitone involution, join/meet as least upper and
/// greatest lower bounds, the embedding an order embedding commuting with
/// the involutions.
CheckReport check_dm_invariants(const Poset& p, const DMLattice& l);

/// "{0,a,b}" for the closed set {0,a,b}, members in index order.
std::string closed_set_name(const Poset& p, const ElementSet& s);
/// Inverse of closed_set_name. Throws UnknownElement / BadDocument.
ElementSet closed_set_from_name(const Poset& p, const std::string& name);

/// The completion as an ordinary poset: one element per closed set (named
/// by closed_set_name), inclusion order, star as the involution.
Poset lattice_as_poset(const Poset& p, const DMLattice& l);

struct CompletionConsistency {
  CheckReport poset_report;
  CheckReport lattice_report;
  /// Holds iff the poset is consistent exactly when its completion is.
  CheckReport verdict;
};

/// Throws NoInvolution / NotAntitone.
CompletionConsistency check_completion_consistency(const Poset& p);

} // namespace copo
