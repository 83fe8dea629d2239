#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copo/element_set.hpp"
#include "copo/error.hpp"

namespace copo {

using NamePair = std::pair<std::string, std::string>;
using NameMap = std::map<std::string, std::string>;

/// Finite bounded poset, optionally carrying a unary map `inv`.
///
/// The order is stored as principal down-sets and up-sets. A present `inv`
/// is always a bijective involution; whether it is also antitone is
/// recorded in antitone() and enforced by the operations that need it.
/// Immutable after construction.
class Poset {
public:
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement.
  Element index(std::string_view name) const;

  bool leq(Element x, Element y) const { return down_[y].contains(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// L(x)
  const ElementSet& down(Element x) const { return down_[x]; }
  /// U(x)
  const ElementSet& up(Element x) const { return up_[x]; }
  ElementSet universe() const { return ElementSet::full(size()); }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool has_involution() const { return inv_.has_value(); }
  /// True when inv is present and order-reversing.
  bool antitone() const { return antitone_; }
  /// Throws NoInvolution.
  Element inv(Element x) const;
  const std::optional<std::vector<Element>>& involution() const { return inv_; }

  /// Hasse diagram, lexicographic in index order.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Throws NoInvolution / NotAntitone unless inv is a validated antitone
  /// involution.
  void require_antitone_involution() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.down_ == b.down_ && a.inv_ == b.inv_;
  }

  /// Builds from an already reflexive-transitive relation given as down-sets.
  /// Validates antisymmetry, boundedness and the involution.
  static Poset from_down_sets(std::vector<std::string> names, std::vector<ElementSet> down,
                              std::optional<std::vector<Element>> inv);

private:
  Poset() = default;

  std::vector<std::string> names_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::optional<std::vector<Element>> inv_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool antitone_ = false;
};

/// Builds a poset from Hasse data. `covers` lists pairs (x, y) with x below
/// y; any generating relation is accepted and closed reflexively and
/// transitively. Throws DuplicateElement, UnknownElement, CycleDetected,
/// NotBounded, BadInvolution or TooLarge.
Poset build_poset(const std::vector<std::string>& elements, const std::vector<NamePair>& covers,
                  const std::optional<NameMap>& inv = std::nullopt);

/// Same order, different unary map (nullopt drops it).
Poset with_involution(const Poset& p, std::optional<std::vector<Element>> inv);

} // namespace copo
