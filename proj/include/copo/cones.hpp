#pragma once

#include "copo/poset.hpp"
#include "copo/report.hpp"

namespace copo {

/// L(A) = {x | x <= a for all a in A}; L(empty) is the whole universe.
ElementSet lower_cone(const Poset& p, const ElementSet& a);
/// U(A) = {x | a <= x for all a in A}; U(empty) is the whole universe.
ElementSet upper_cone(const Poset& p, const ElementSet& a);

inline ElementSet lower_cone(const Poset& p, Element x, Element y) {
  return p.down(x) & p.down(y);
}
inline ElementSet upper_cone(const Poset& p, Element x, Element y) {
  return p.up(x) & p.up(y);
}

/// LU(A) and UL(A).
inline ElementSet lower_upper(const Poset& p, const ElementSet& a) {
  return lower_cone(p, upper_cone(p, a));
}
inline ElementSet upper_lower(const Poset& p, const ElementSet& a) {
  return upper_cone(p, lower_cone(p, a));
}

ElementSet maximal_of(const Poset& p, const ElementSet& a);
ElementSet minimal_of(const Poset& p, const ElementSet& a);

/// A <= B in the set-extended order: a <= b for every a in A, b in B.
bool set_leq(const Poset& p, const ElementSet& a, const ElementSet& b);

/// A' = {x' | x in A}. Throws NoInvolution.
ElementSet apply_inv(const Poset& p, const ElementSet& a);

bool is_antichain(const Poset& p, const ElementSet& a);

/// Elements covering the bottom.
ElementSet atoms(const Poset& p);

/// [a, b]. Throws NotComparable unless a <= b.
ElementSet interval(const Poset& p, Element a, Element b);

struct PairBounds {
  ElementSet minimal_upper;
  ElementSet maximal_lower;
  bool has_join() const { return minimal_upper.size() == 1; }
  bool has_meet() const { return maximal_lower.size() == 1; }
};

PairBounds pair_bounds(const Poset& p, Element x, Element y);

/// Every pair has a join and a meet. Witness: first pair (x, y), x < y by
/// index, lacking one, with both bound sets as evidence.
CheckReport is_lattice(const Poset& p);

/// The unary operation is an antitone involution. Witness: (x, y) with
/// x <= y but not y' <= x', or (x) with x'' != x.
CheckReport is_antitone_involution(const Poset& p);

} // namespace copo
