#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copo/poset.hpp"
#include "copo/report.hpp"

namespace copo {

/// Commutative meet-directoid: a total binary operation over the universe
/// of a poset, plus an optional unary map used to derive the join
/// x v y = (x' ^ y')'.
///
/// Nothing about the table is assumed on construction; check_directoid_axioms
/// and induced_poset validate it.
class Directoid {
public:
  Directoid(std::vector<std::string> names, std::vector<Element> table,
            std::optional<std::vector<Element>> inv);

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(Element x) const { return (*names_)[x]; }

  Element meet(Element x, Element y) const { return table_[x * size() + y]; }
  bool has_involution() const { return inv_.has_value(); }
  /// Throws NoInvolution.
  Element inv(Element x) const;
  /// (x' ^ y')'. Throws NoInvolution.
  Element join(Element x, Element y) const { return inv(meet(inv(x), inv(y))); }

  /// x <= y iff x ^ y = x.
  bool induced_leq(Element x, Element y) const { return meet(x, y) == x; }

  const std::vector<Element>& table() const { return table_; }
  const std::optional<std::vector<Element>>& involution() const { return inv_; }

  friend bool operator==(const Directoid& a, const Directoid& b) {
    return a.names() == b.names() && a.table_ == b.table_ && a.inv_ == b.inv_;
  }

private:
  friend class DirectoidEnumerator;
  void set(Element x, Element y, Element v) {
    table_[x * size() + y] = v;
    table_[y * size() + x] = v;
  }

  std::shared_ptr<const std::vector<std::string>> names_;
  std::vector<Element> table_;
  std::optional<std::vector<Element>> inv_;
};

/// How x ^ y is chosen from L(x,y) for incomparable x, y.
struct ChoicePolicy {
  enum class Kind {
    Canonical,         ///< lowest-index element of max L(x,y)
    LowestIndexOfCone, ///< lowest-index element of L(x,y)
    Explicit,          ///< given values; unlisted pairs fall back to Canonical
  };
  Kind kind = Kind::Canonical;
  /// Keyed by (x, y) as written; both orders may appear but must agree.
  std::map<std::pair<Element, Element>, Element> choices;

  static ChoicePolicy canonical() { return {}; }
  static ChoicePolicy lowest_of_cone() { return {Kind::LowestIndexOfCone, {}}; }
  static ChoicePolicy explicit_choices(std::map<std::pair<Element, Element>, Element> c) {
    return {Kind::Explicit, std::move(c)};
  }
};

/// Comparable pairs meet to the smaller element; incomparable pairs per
/// policy. Carries over the poset's unary map. Throws BadExplicitChoice.
Directoid assign_directoid(const Poset& p, const ChoicePolicy& policy = ChoicePolicy::canonical());

/// The poset defined by x <= y iff x ^ y = x. Throws NotPartialOrder when
/// that relation is not a partial order, and the usual construction errors
/// (NotBounded, BadInvolution) otherwise.
Poset induced_poset(const Directoid& d);

/// Idempotency, commutativity and weak associativity
/// (x ^ (y ^ z)) ^ z = x ^ (y ^ z).
CheckReport check_directoid_axioms(const Directoid& d);

/// c in L(a,b) tested as c = (c ^ a) ^ (c ^ b).
inline bool membership_test(const Directoid& d, Element c, Element a, Element b) {
  return c == d.meet(d.meet(c, a), d.meet(c, b));
}

/// x'' = x and (x ^ y)' ^ y' = y'; together equivalent to ' being an
/// antitone involution of the induced poset. Throws NoInvolution.
CheckReport check_involution_identities(const Directoid& d);

/// The two implications characterising consistency:
///  - complement-cone-transfer: for x, y outside {0,1},
///    z = (z ^ x) ^ (z ^ x') implies z = (z ^ y) ^ (z ^ y');
///  - nonzero-meet-witness: if z = (z ^ x) ^ (z ^ y) holds only for z = 0,
///    then x = 0 or y = 0.
/// 0 and 1 are those of the induced order. Throws NoInvolution, NotBounded.
CheckReport check_consistency_implications(const Directoid& d);

/// For all w, s, x, y, z: if w ^ ((t v x) v (t v y)) = w ^ z = w and
/// s v ((t ^ x) ^ (t ^ z)) = s v ((t ^ y) ^ (t ^ z)) = s for every t, then
/// w <= s. Equivalent to distributivity of the induced poset.
/// Throws NoInvolution.
CheckReport check_distributivity_implication(const Directoid& d);

/// Term images: {z ^ x}, {z v x}, {(z ^ x) ^ (z ^ y)} over all z.
ElementSet lower_terms(const Directoid& d, Element x);
ElementSet upper_terms(const Directoid& d, Element x);
ElementSet pair_lower_terms(const Directoid& d, Element x, Element y);

/// Two candidate term descriptions of U(x,y):
/// JoinJoin = {(t v x) v (t v y)}, JoinMeet = {(t v x) ^ (t v y)}.
/// Only JoinJoin is a valid description of U(x,y) in general; the other is
/// kept for diagnostics.
enum class UpperPairForm { JoinJoin, JoinMeet };
ElementSet pair_upper_terms(const Directoid& d, Element x, Element y, UpperPairForm form);

inline constexpr std::uint64_t kDefaultDirectoidBudget = 1'000'000;

/// Number of directoids assignable to p: the product over incomparable
/// pairs of |L(x,y)|. Saturates at UINT64_MAX.
std::uint64_t count_directoids(const Poset& p);

/// Streams every directoid assignable to p exactly once, in lexicographic
/// order of choices (pairs ordered by index, options ascending, first pair
/// most significant).
class DirectoidEnumerator {
public:
  /// Throws BudgetExceeded when count_directoids(p) > budget.
  explicit DirectoidEnumerator(const Poset& p, std::uint64_t budget = kDefaultDirectoidBudget);

  std::uint64_t count() const { return count_; }

  /// Advances to the next directoid; false once exhausted. The first call
  /// yields the first directoid.
  bool next();
  const Directoid& current() const { return current_; }

private:
  struct Slot {
    Element x, y;
    std::vector<Element> options;
    std::size_t pos = 0;
  };
  std::vector<Slot> slots_;
  Directoid current_;
  std::uint64_t count_ = 1;
  bool started_ = false;
  bool done_ = false;
};

/// Collects every directoid. Throws BudgetExceeded.
std::vector<Directoid> all_directoids(const Poset& p, std::uint64_t budget = kDefaultDirectoidBudget);

/// Verdict of a check across the whole family of directoids assignable to
/// a poset.
struct FamilyResult {
  enum class Method {
    /// Three-valued evaluation of every term over the set of values it can
    /// take in any assigned directoid. A determined verdict is the verdict
    /// of every member.
    Symbolic,
    /// Each directoid built and checked.
    Enumerated,
  };
  Method method = Method::Symbolic;
  std::uint64_t family_size = 0; ///< saturating
  std::uint64_t holding = 0;     ///< Enumerated only
  std::uint64_t failing = 0;     ///< Enumerated only
  /// Set when every member gets the same verdict.
  std::optional<bool> uniform;
};

/// Involution identities plus consistency implications, over every
/// assigned directoid. Falls back to enumeration (up to `budget`) when the
/// symbolic pass is undetermined; throws BudgetExceeded if that is too big.
FamilyResult consistency_over_all_directoids(const Poset& p, std::uint64_t budget = kDefaultDirectoidBudget);
/// Distributivity implication over every assigned directoid.
FamilyResult distributivity_over_all_directoids(const Poset& p,
                                                std::uint64_t budget = kDefaultDirectoidBudget);

/// Enumerated counterparts, never symbolic. Throw BudgetExceeded.
FamilyResult consistency_by_enumeration(const Poset& p, std::uint64_t budget = kDefaultDirectoidBudget);
FamilyResult distributivity_by_enumeration(const Poset& p, std::uint64_t budget = kDefaultDirectoidBudget);

} // namespace copo
