#include "copo/properties.hpp"

#include <stdexcept>

namespace copo {

namespace {

constexpr std::pair<PropertyId, std::string_view> kPropertyNames[] = {
    {PropertyId::Modular, "modular"},
    {PropertyId::StronglyModular, "strongly-modular"},
    {PropertyId::Distributive, "distributive"},
    {PropertyId::Complementation, "complementation"},
    {PropertyId::Boolean, "boolean"},
    {PropertyId::Consistent, "consistent"},
    {PropertyId::UniformComplementCones, "uniform-cones"},
    {PropertyId::NonzeroLowerCones, "nonzero-cones"},
    {PropertyId::Lattice, "lattice"},
    {PropertyId::AntitoneInvolution, "antitone-involution"},
};

// L(U(A),B) style helpers over element pairs
ElementSet upper(const Poset& p, Element x, Element y) { return p.up(x) & p.up(y); }
ElementSet lower(const Poset& p, Element x, Element y) { return p.down(x) & p.down(y); }

ElementSet zero_set(const Poset& p) { return ElementSet::single(p.bottom()); }
ElementSet one_set(const Poset& p) { return ElementSet::single(p.top()); }

std::string_view leaf(std::string_view condition) {
  for (std::string_view prefix : {"consistent/", "boolean/"}) {
    if (condition.substr(0, prefix.size()) == prefix) condition.remove_prefix(prefix.size());
  }
  return condition;
}

CheckReport prefixed(std::string prefix, CheckReport r) {
  r.condition = prefix + "/" + r.condition;
  return r;
}

} // namespace

std::string_view to_string(PropertyId id) {
  for (const auto& [k, v] : kPropertyNames)
    if (k == id) return v;
  return "unknown";
}

std::optional<PropertyId> parse_property(std::string_view s) {
  for (const auto& [k, v] : kPropertyNames)
    if (v == s) return k;
  return std::nullopt;
}

bool needs_involution(PropertyId id) {
  switch (id) {
  case PropertyId::Complementation:
  case PropertyId::Boolean:
  case PropertyId::Consistent:
  case PropertyId::UniformComplementCones:
  case PropertyId::NonzeroLowerCones:
  case PropertyId::AntitoneInvolution: return true;
  default: return false;
  }
}

Sides modular_sides(const Poset& p, Element x, Element y, Element z) {
  ElementSet lhs = lower_cone(p, upper(p, x, y)) & p.down(z);
  ElementSet rhs = lower_upper(p, lower(p, y, z) | ElementSet::single(x));
  return {lhs, rhs};
}

Sides strong_upper_sides(const Poset& p, Element x, Element y, Element z) {
  const ElementSet uxz = upper(p, x, z);
  ElementSet lhs = lower_cone(p, upper(p, x, y) | uxz);
  ElementSet inner = lower_cone(p, uxz) & p.down(y);
  ElementSet rhs = lower_upper(p, inner | ElementSet::single(x));
  return {lhs, rhs};
}

Sides strong_lower_sides(const Poset& p, Element x, Element y, Element z) {
  const ElementSet lxz = lower(p, x, z);
  ElementSet lhs = lower_cone(p, upper_cone(p, lxz) & p.up(y)) & p.down(z);
  ElementSet rhs = lower_upper(p, lxz | lower(p, y, z));
  return {lhs, rhs};
}

Sides distributive_sides(const Poset& p, Element x, Element y, Element z) {
  ElementSet lhs = lower_cone(p, upper(p, x, y)) & p.down(z);
  ElementSet rhs = lower_upper(p, lower(p, x, z) | lower(p, y, z));
  return {lhs, rhs};
}

std::array<bool, 4> distributivity_forms(const Poset& p) {
  std::array<bool, 4> ok{true, true, true, true};
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet uxy = upper(p, x, y);
      const ElementSet lxy = lower(p, x, y);
      for (Element z = 0; z < n; ++z) {
        const ElementSet lxz = lower(p, x, z), lyz = lower(p, y, z);
        const ElementSet uxz = upper(p, x, z), uyz = upper(p, y, z);
        if (ok[0] && (lower_cone(p, uxy) & p.down(z)) != lower_upper(p, lxz | lyz)) ok[0] = false;
        if (ok[1] && upper_lower(p, uxy | ElementSet::single(z)) != upper_cone(p, lxz | lyz))
          ok[1] = false;
        if (ok[2] && (upper_cone(p, lxy) & p.up(z)) != upper_lower(p, uxz | uyz)) ok[2] = false;
        if (ok[3] && lower_upper(p, lxy | ElementSet::single(z)) != lower_cone(p, uxz | uyz))
          ok[3] = false;
      }
    }
  }
  return ok;
}

bool free_inclusions_hold(const Poset& p, Element x, Element y, Element z) {
  const ElementSet a = lower_upper(p, lower(p, x, z) | lower(p, y, z));
  const ElementSet b = lower_cone(p, upper(p, x, y)) & p.down(z);
  const ElementSet c = upper_lower(p, upper(p, x, z) | upper(p, y, z));
  const ElementSet d = upper_cone(p, lower(p, x, y)) & p.up(z);
  return a.is_subset_of(b) && c.is_subset_of(d);
}

CheckReport is_modular(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!p.leq(x, z)) continue;
        auto [lhs, rhs] = modular_sides(p, x, y, z);
        if (lhs != rhs)
          return CheckReport::fail("modular", {x, y, z}, {{"L(U(x,y),z)", lhs}, {"LU(x,L(y,z))", rhs}});
      }
    }
  }
  return CheckReport::pass("modular");
}

CheckReport is_strongly_modular(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        auto [l1, r1] = strong_upper_sides(p, x, y, z);
        if (l1 != r1)
          return CheckReport::fail("strongly-modular/upper", {x, y, z},
                                   {{"L(U(x,y),U(x,z))", l1}, {"LU(x,L(y,U(x,z)))", r1}});
        auto [l2, r2] = strong_lower_sides(p, x, y, z);
        if (l2 != r2)
          return CheckReport::fail("strongly-modular/lower", {x, y, z},
                                   {{"L(U(L(x,z),y),z)", l2}, {"LU(L(x,z),L(y,z))", r2}});
      }
    }
  }
  return CheckReport::pass("strongly-modular");
}

CheckReport is_distributive(const Poset& p, bool cross_validate) {
  const auto n = static_cast<Element>(p.size());
  CheckReport result = CheckReport::pass("distributive");
  for (Element x = 0; x < n && result.holds(); ++x) {
    for (Element y = 0; y < n && result.holds(); ++y) {
      const ElementSet luxy = lower_cone(p, upper(p, x, y));
      for (Element z = 0; z < n; ++z) {
        const ElementSet lhs = luxy & p.down(z);
        const ElementSet rhs = lower_upper(p, lower(p, x, z) | lower(p, y, z));
        if (!lhs.is_subset_of(rhs)) {
          result = CheckReport::fail("distributive", {x, y, z},
                                     {{"L(U(x,y),z)", lhs}, {"LU(L(x,z),L(y,z))", rhs}});
          break;
        }
      }
    }
  }
  if (cross_validate) {
    for (bool form : distributivity_forms(p)) {
      if (form != result.holds()) throw std::logic_error("equivalent distributivity forms disagree");
    }
  }
  return result;
}

CheckReport is_complementation(const Poset& p) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    const ElementSet l = lower(p, x, p.inv(x));
    if (l != zero_set(p)) return CheckReport::fail("complementation/lower", {x}, {{"L(x,x')", l}});
    const ElementSet u = upper(p, x, p.inv(x));
    if (u != one_set(p)) return CheckReport::fail("complementation/upper", {x}, {{"U(x,x')", u}});
  }
  return CheckReport::pass("complementation");
}

CheckReport is_boolean(const Poset& p) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  CheckReport d = is_distributive(p);
  if (!d.holds()) return prefixed("boolean", std::move(d));
  CheckReport c = is_complementation(p);
  if (!c.holds()) return prefixed("boolean", std::move(c));
  return CheckReport::pass("boolean");
}

CheckReport check_uniform_complement_cones(const Poset& p) {
  p.require_antitone_involution();
  const auto n = static_cast<Element>(p.size());
  auto inner = [&](Element x) { return x != p.bottom() && x != p.top(); };
  for (Element x = 0; x < n; ++x) {
    if (!inner(x)) continue;
    const ElementSet lx = lower(p, x, p.inv(x));
    for (Element y = x + 1; y < n; ++y) {
      if (!inner(y)) continue;
      const ElementSet ly = lower(p, y, p.inv(y));
      if (lx != ly) return CheckReport::fail("uniform-cones", {x, y}, {{"L(x,x')", lx}, {"L(y,y')", ly}});
    }
  }
  return CheckReport::pass("uniform-cones");
}

CheckReport check_nonzero_lower_cones(const Poset& p) {
  p.require_antitone_involution();
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    if (x == p.bottom()) continue;
    for (Element y = x; y < n; ++y) {
      if (y == p.bottom()) continue;
      const ElementSet l = lower(p, x, y);
      if (l == zero_set(p)) return CheckReport::fail("nonzero-cones", {x, y}, {{"L(x,y)", l}});
    }
  }
  return CheckReport::pass("nonzero-cones");
}

CheckReport is_consistent(const Poset& p) {
  CheckReport a = check_uniform_complement_cones(p);
  if (!a.holds()) return prefixed("consistent", std::move(a));
  CheckReport b = check_nonzero_lower_cones(p);
  if (!b.holds()) return prefixed("consistent", std::move(b));
  return CheckReport::pass("consistent");
}

CheckReport structural_characterization(const Poset& p) {
  p.require_antitone_involution();
  if (p.size() < 3) throw Error(ErrorKind::TooSmall, "structural characterization needs at least 3 elements");

  const ElementSet at = atoms(p);
  if (at.size() != 1) return CheckReport::fail("structural/atoms", at.members(), {{"atoms", at}});
  const Element a = at.first();
  const Element ac = p.inv(a);
  if (!p.leq(a, ac)) return CheckReport::fail("structural/atom-order", {a});

  const ElementSet iv = interval(p, a, ac);
  ElementSet rest = p.universe() - iv;
  rest.erase(p.bottom());
  rest.erase(p.top());
  if (!rest.empty()) return CheckReport::fail("structural/coverage", {rest.first()}, {{"interval", iv}});

  // complementation of the bounded poset ([a,a'], <=, ', a, a')
  const ElementSet ia = ElementSet::single(a);
  const ElementSet iac = ElementSet::single(ac);
  std::optional<CheckReport> failure;
  iv.for_each([&](Element x) {
    if (failure) return;
    const ElementSet l = lower(p, x, p.inv(x)) & iv;
    if (l != ia) {
      failure = CheckReport::fail("structural/interval-lower", {x}, {{"interval L(x,x')", l}});
      return;
    }
    const ElementSet u = upper(p, x, p.inv(x)) & iv;
    if (u != iac) failure = CheckReport::fail("structural/interval-upper", {x}, {{"interval U(x,x')", u}});
  });
  if (failure) return *failure;

  CheckReport ok = CheckReport::pass("structural");
  ok.witness = {a};
  ok.evidence = {{"atoms", at}, {"interval", iv}};
  return ok;
}

CheckReport check_disjoint_pair_complements(const Poset& p) {
  p.require_antitone_involution();
  if (!is_distributive(p).holds())
    throw Error(ErrorKind::NotDistributive, "disjoint-pair complement check requires a distributive poset");
  const auto n = static_cast<Element>(p.size());
  const ElementSet zero = zero_set(p);
  const ElementSet one = one_set(p);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.leq(a, b) || lower(p, b, p.inv(a)) != zero) continue;
      const bool ok = lower(p, a, p.inv(a)) == zero && lower(p, b, p.inv(b)) == zero &&
                      upper(p, a, p.inv(a)) == one && upper(p, b, p.inv(b)) == one;
      if (!ok)
        return CheckReport::fail("disjoint-pair-complements", {a, b},
                                 {{"L(a,a')", lower(p, a, p.inv(a))}, {"L(b,b')", lower(p, b, p.inv(b))},
                                  {"U(a,a')", upper(p, a, p.inv(a))}, {"U(b,b')", upper(p, b, p.inv(b))}});
    }
  }
  return CheckReport::pass("disjoint-pair-complements");
}

CheckReport check_property(const Poset& p, PropertyId id) {
  switch (id) {
  case PropertyId::Modular: return is_modular(p);
  case PropertyId::StronglyModular: return is_strongly_modular(p);
  case PropertyId::Distributive: return is_distributive(p);
  case PropertyId::Complementation: return is_complementation(p);
  case PropertyId::Boolean: return is_boolean(p);
  case PropertyId::Consistent: return is_consistent(p);
  case PropertyId::UniformComplementCones: return check_uniform_complement_cones(p);
  case PropertyId::NonzeroLowerCones: return check_nonzero_lower_cones(p);
  case PropertyId::Lattice: return is_lattice(p);
  case PropertyId::AntitoneInvolution: return is_antitone_involution(p);
  }
  throw std::invalid_argument("unknown property");
}

bool recheck_witness(const Poset& p, const CheckReport& r) {
  const std::string_view c = leaf(r.condition);
  const auto& w = r.witness;
  auto need = [&](std::size_t k) {
    if (w.size() != k) throw std::invalid_argument("witness arity mismatch for " + r.condition);
  };
  auto differ = [](const Sides& s) { return s.first != s.second; };

  if (c == "modular") {
    need(3);
    return p.leq(w[0], w[2]) && differ(modular_sides(p, w[0], w[1], w[2]));
  }
  if (c == "strongly-modular/upper") {
    need(3);
    return differ(strong_upper_sides(p, w[0], w[1], w[2]));
  }
  if (c == "strongly-modular/lower") {
    need(3);
    return differ(strong_lower_sides(p, w[0], w[1], w[2]));
  }
  if (c == "distributive") {
    need(3);
    auto [lhs, rhs] = distributive_sides(p, w[0], w[1], w[2]);
    return !lhs.is_subset_of(rhs);
  }
  if (c == "complementation/lower") {
    need(1);
    return lower(p, w[0], p.inv(w[0])) != zero_set(p);
  }
  if (c == "complementation/upper") {
    need(1);
    return upper(p, w[0], p.inv(w[0])) != one_set(p);
  }
  if (c == "uniform-cones") {
    need(2);
    auto inner = [&](Element x) { return x != p.bottom() && x != p.top(); };
    return inner(w[0]) && inner(w[1]) && lower(p, w[0], p.inv(w[0])) != lower(p, w[1], p.inv(w[1]));
  }
  if (c == "nonzero-cones") {
    need(2);
    return w[0] != p.bottom() && w[1] != p.bottom() && lower(p, w[0], w[1]) == zero_set(p);
  }
  if (c == "lattice") {
    need(2);
    const PairBounds b = pair_bounds(p, w[0], w[1]);
    return !b.has_join() || !b.has_meet();
  }
  if (c == "antitone-involution") {
    if (w.size() == 1) return p.inv(p.inv(w[0])) != w[0];
    need(2);
    return p.leq(w[0], w[1]) && !p.leq(p.inv(w[1]), p.inv(w[0]));
  }
  if (c == "disjoint-pair-complements") {
    need(2);
    const Element a = w[0], b = w[1];
    if (!p.leq(a, b) || lower(p, b, p.inv(a)) != zero_set(p)) return false;
    return lower(p, a, p.inv(a)) != zero_set(p) || lower(p, b, p.inv(b)) != zero_set(p) ||
           upper(p, a, p.inv(a)) != one_set(p) || upper(p, b, p.inv(b)) != one_set(p);
  }
  if (c == "structural/atoms") return atoms(p).size() != 1 && atoms(p).members() == w;
  if (c == "structural/atom-order") {
    need(1);
    return !p.leq(w[0], p.inv(w[0]));
  }
  if (c == "structural/coverage") {
    need(1);
    const Element a = atoms(p).first();
    return w[0] != p.bottom() && w[0] != p.top() && !(p.leq(a, w[0]) && p.leq(w[0], p.inv(a)));
  }
  if (c == "structural/interval-lower" || c == "structural/interval-upper") {
    need(1);
    const Element a = atoms(p).first();
    const ElementSet iv = interval(p, a, p.inv(a));
    if (c == "structural/interval-lower") return (lower(p, w[0], p.inv(w[0])) & iv) != ElementSet::single(a);
    return (upper(p, w[0], p.inv(w[0])) & iv) != ElementSet::single(p.inv(a));
  }
  throw std::invalid_argument("no witness re-check for condition " + r.condition);
}

} // namespace copo
