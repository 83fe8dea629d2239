#include "copo/residuation.hpp"

#include "copo/cones.hpp"
#include "copo/properties.hpp"

namespace copo {

std::string_view to_string(OperatorVariant v) { return v == OperatorVariant::Meet ? "meet" : "nested"; }

std::optional<OperatorVariant> parse_variant(std::string_view s) {
  if (s == "13" || s == "meet") return OperatorVariant::Meet;
  if (s == "14" || s == "nested") return OperatorVariant::Nested;
  return std::nullopt;
}

ElementSet odot(const Poset& p, OperatorVariant v, Element x, Element y) {
  p.require_antitone_involution();
  if (p.leq(x, p.inv(y))) return ElementSet::single(p.bottom());
  if (v == OperatorVariant::Meet) return maximal_of(p, p.down(x) & p.down(y));
  // U(x,y') first, then L of that set together with y
  const ElementSet u = p.up(x) & p.up(p.inv(y));
  return maximal_of(p, lower_cone(p, u) & p.down(y));
}

ElementSet arrow(const Poset& p, OperatorVariant v, Element x, Element y) {
  p.require_antitone_involution();
  if (p.leq(x, y)) return ElementSet::single(p.top());
  if (v == OperatorVariant::Meet) return minimal_of(p, p.up(p.inv(x)) & p.up(y));
  const ElementSet l = p.down(x) & p.down(y);
  return minimal_of(p, upper_cone(p, l) & p.up(p.inv(x)));
}

ResiduationTables build_tables(const Poset& p, OperatorVariant v) {
  p.require_antitone_involution();
  const auto n = static_cast<Element>(p.size());
  ResiduationTables t{v, n, std::vector<ElementSet>(std::size_t{n} * n), std::vector<ElementSet>(std::size_t{n} * n)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t.odot[x * n + y] = odot(p, v, x, y);
      t.arrow[x * n + y] = arrow(p, v, x, y);
    }
  }
  return t;
}

CheckReport check_adjointness(const Poset& p, const ResiduationTables& t) {
  const auto n = static_cast<Element>(t.n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const bool left = set_leq(p, t.conj(x, y), ElementSet::single(z));
        const bool right = set_leq(p, ElementSet::single(x), t.impl(y, z));
        if (left != right)
          return CheckReport::fail("adjointness", {x, y, z}, {{"x(.)y", t.conj(x, y)}, {"y->z", t.impl(y, z)}});
      }
    }
  }
  return CheckReport::pass("adjointness");
}

CheckReport check_commutativity(const ResiduationTables& t) {
  const auto n = static_cast<Element>(t.n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (t.conj(x, y) != t.conj(y, x))
        return CheckReport::fail("commutativity", {x, y}, {{"x(.)y", t.conj(x, y)}, {"y(.)x", t.conj(y, x)}});
    }
  }
  return CheckReport::pass("commutativity");
}

CheckReport check_unit(const Poset& p, const ResiduationTables& t) {
  const auto n = static_cast<Element>(t.n);
  const Element one = p.top();
  for (Element x = 0; x < n; ++x) {
    const ElementSet expect = ElementSet::single(x);
    if (t.conj(x, one) != expect) return CheckReport::fail("unit", {x}, {{"x(.)1", t.conj(x, one)}});
    if (t.conj(one, x) != expect) return CheckReport::fail("unit", {x}, {{"1(.)x", t.conj(one, x)}});
  }
  return CheckReport::pass("unit");
}

ResiduationCertificate certify_residuation(const Poset& p, OperatorVariant v) {
  const std::string name = v == OperatorVariant::Meet ? "residuated" : "weak-residuated";
  ResiduationCertificate c{v, CheckReport::pass(name), {}, CheckReport::pass("unit"),
                       CheckReport::pass("commutativity"), CheckReport::pass("adjointness"), 0};

  if (!p.has_involution() || !p.antitone()) {
    c.verdict = CheckReport::not_applicable(name, "poset lacks an antitone involution");
    return c;
  }
  c.hypotheses.push_back(v == OperatorVariant::Meet ? is_distributive(p) : is_strongly_modular(p));
  c.hypotheses.push_back(is_consistent(p));
  for (const auto& h : c.hypotheses) {
    if (!h.holds()) {
      c.verdict = CheckReport::not_applicable(name, "hypothesis fails: " + h.condition);
      return c;
    }
  }

  const ResiduationTables t = build_tables(p, v);
  c.unit = check_unit(p, t);
  c.commutativity = check_commutativity(t);
  c.adjointness = check_adjointness(p, t);
  c.triples_checked = p.size() * p.size() * p.size();

  std::vector<const CheckReport*> required = {&c.unit, &c.adjointness};
  if (v == OperatorVariant::Meet) required.push_back(&c.commutativity);
  for (const CheckReport* r : required) {
    if (!r->holds()) {
      c.verdict = CheckReport::fail(name, r->witness, r->evidence);
      c.verdict.note = "conclusion fails: " + r->condition;
      return c;
    }
  }
  return c;
}

} // namespace copo
