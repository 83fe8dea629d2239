#include "copo/cones.hpp"

namespace copo {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

ElementSet lower_cone(const Poset& p, const ElementSet& a) {
  ElementSet out = p.universe();
  a.for_each([&](Element x) { out &= p.down(x); });
  return out;
}

ElementSet upper_cone(const Poset& p, const ElementSet& a) {
  ElementSet out = p.universe();
  a.for_each([&](Element x) { out &= p.up(x); });
  return out;
}

ElementSet maximal_of(const Poset& p, const ElementSet& a) {
  ElementSet out;
  a.for_each([&](Element x) {
    if ((p.up(x) & a).size() == 1) out.insert(x);
  });
  return out;
}

ElementSet minimal_of(const Poset& p, const ElementSet& a) {
  ElementSet out;
  a.for_each([&](Element x) {
    if ((p.down(x) & a).size() == 1) out.insert(x);
  });
  return out;
}

bool set_leq(const Poset& p, const ElementSet& a, const ElementSet& b) {
  bool ok = true;
  a.for_each([&](Element x) {
    if (ok && !b.is_subset_of(p.up(x))) ok = false;
  });
  return ok;
}

ElementSet apply_inv(const Poset& p, const ElementSet& a) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  ElementSet out;
  a.for_each([&](Element x) { out.insert(p.inv(x)); });
  return out;
}

bool is_antichain(const Poset& p, const ElementSet& a) {
  bool ok = true;
  a.for_each([&](Element x) {
    if ((p.up(x) & a).size() != 1) ok = false;
  });
  return ok;
}

ElementSet atoms(const Poset& p) {
  ElementSet rest = p.universe();
  rest.erase(p.bottom());
  return minimal_of(p, rest);
}

ElementSet interval(const Poset& p, Element a, Element b) {
  if (!p.leq(a, b))
    throw Error(ErrorKind::NotComparable, "'" + p.name(a) + "' is not below '" + p.name(b) + "'");
  return p.up(a) & p.down(b);
}

PairBounds pair_bounds(const Poset& p, Element x, Element y) {
  return PairBounds{minimal_of(p, upper_cone(p, x, y)), maximal_of(p, lower_cone(p, x, y))};
}

CheckReport is_lattice(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      const PairBounds b = pair_bounds(p, x, y);
      if (!b.has_join() || !b.has_meet()) {
        return CheckReport::fail("lattice", {x, y},
                                 {{"minimal upper bounds", b.minimal_upper},
                                  {"maximal lower bounds", b.maximal_lower}});
      }
    }
  }
  return CheckReport::pass("lattice");
}

CheckReport is_antitone_involution(const Poset& p) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    if (p.inv(p.inv(x)) != x) return CheckReport::fail("antitone-involution", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(p.inv(y), p.inv(x)))
        return CheckReport::fail("antitone-involution", {x, y});
    }
  }
  return CheckReport::pass("antitone-involution");
}

} // namespace copo
