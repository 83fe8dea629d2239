#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "copo/cones.hpp"

namespace copo {

enum class PropertyId {
  Modular,
  StronglyModular,
  Distributive,
  Complementation,
  Boolean,
  Consistent,
  UniformComplementCones, ///< L(x,x') = L(y,y') for all x, y outside {0,1}
  NonzeroLowerCones,      ///< L(x,y) != {0} for all nonzero x, y
  Lattice,
  AntitoneInvolution,
};

inline constexpr std::array kAllProperties = {
    PropertyId::Modular,         PropertyId::StronglyModular,        PropertyId::Distributive,
    PropertyId::Complementation, PropertyId::Boolean,                PropertyId::Consistent,
    PropertyId::UniformComplementCones, PropertyId::NonzeroLowerCones, PropertyId::Lattice,
    PropertyId::AntitoneInvolution,
};

/// Kebab-case id used by reports and the command line ("strongly-modular").
std::string_view to_string(PropertyId id);
std::optional<PropertyId> parse_property(std::string_view s);

/// Whether the check needs the unary operation.
bool needs_involution(PropertyId id);

/// Two sides of an LU-identity at one tuple; the identity holds there iff
/// they are equal.
using Sides = std::pair<ElementSet, ElementSet>;

/// x <= z implies L(U(x,y),z) = LU(x,L(y,z)).
Sides modular_sides(const Poset& p, Element x, Element y, Element z);
/// L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z))).
Sides strong_upper_sides(const Poset& p, Element x, Element y, Element z);
/// L(U(L(x,z),y),z) = LU(L(x,z),L(y,z)).
Sides strong_lower_sides(const Poset& p, Element x, Element y, Element z);
/// L(U(x,y),z) = LU(L(x,z),L(y,z)).
Sides distributive_sides(const Poset& p, Element x, Element y, Element z);

/// The four equivalent forms of distributivity, each checked over all
/// triples: L(U(x,y),z) = LU(L(x,z),L(y,z)); UL(U(x,y),z) = U(L(x,z),L(y,z));
/// U(L(x,y),z) = UL(U(x,z),U(y,z)); LU(L(x,y),z) = L(U(x,z),U(y,z)).
std::array<bool, 4> distributivity_forms(const Poset& p);

/// LU(L(x,z),L(y,z)) <= L(U(x,y),z) and UL(U(x,z),U(y,z)) <= U(L(x,y),z),
/// which hold in every poset.
bool free_inclusions_hold(const Poset& p, Element x, Element y, Element z);

CheckReport is_modular(const Poset& p);
CheckReport is_strongly_modular(const Poset& p);

/// Checks only L(U(x,y),z) <= LU(L(x,z),L(y,z)); the reverse inclusion is
/// free. With `cross_validate`, also evaluates all four equivalent forms and
/// throws std::logic_error if any disagrees with the verdict.
CheckReport is_distributive(const Poset& p, bool cross_validate = false);

/// L(x,x') = {0} and U(x,x') = {1} for every x. Throws NoInvolution.
CheckReport is_complementation(const Poset& p);
/// Distributive and complemented. Throws NoInvolution.
CheckReport is_boolean(const Poset& p);

/// Throws NoInvolution / NotAntitone.
CheckReport check_uniform_complement_cones(const Poset& p);
CheckReport check_nonzero_lower_cones(const Poset& p);
/// Both conditions; a failing report names the condition that failed.
CheckReport is_consistent(const Poset& p);

/// Unique atom a with P = [a,a'] + {0,1} and ' a complementation of the
/// interval. Throws TooSmall (fewer than 3 elements) and the involution
/// errors.
CheckReport structural_characterization(const Poset& p);

/// For every a <= b with L(b,a') = {0}: L(a,a') = L(b,b') = {0} and
/// U(a,a') = U(b,b') = {1}. Requires a distributive poset with antitone
/// involution; throws NotDistributive otherwise.
CheckReport check_disjoint_pair_complements(const Poset& p);

CheckReport check_property(const Poset& p, PropertyId id);

/// Re-evaluates the condition named by a failing report at its witness.
/// True iff the failure reproduces. Throws std::invalid_argument for
/// conditions it does not know.
bool recheck_witness(const Poset& p, const CheckReport& report);

} // namespace copo
