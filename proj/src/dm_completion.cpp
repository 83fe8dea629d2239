#include "copo/dm_completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "copo/cones.hpp"
#include "copo/properties.hpp"

namespace copo {

namespace {

void sort_closed(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return bitmask_less(a, b);
  });
}

} // namespace

std::size_t DMLattice::index_of(const ElementSet& s) const {
  for (std::size_t i = 0; i < closed_sets.size(); ++i)
    if (closed_sets[i] == s) return i;
  throw std::out_of_range("set is not closed");
}

std::size_t DMLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(closed_sets[a] & closed_sets[b]);
}

std::vector<ElementSet> dm_closed_sets(const Poset& p) {
  std::unordered_set<ElementSet, ElementSetHash> seen{p.universe()};
  std::vector<ElementSet> family{p.universe()};
  for (Element x = 0; x < p.size(); ++x) {
    const std::size_t before = family.size();
    for (std::size_t i = 0; i < before; ++i) {
      ElementSet c = family[i] & p.down(x);
      if (seen.insert(c).second) family.push_back(c);
    }
  }
  sort_closed(family);
  return family;
}

std::vector<ElementSet> dm_closed_sets_by_fixpoint(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw Error(ErrorKind::TooLarge, "subset scan limited to 20 elements");
  std::vector<ElementSet> family;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet a;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) a.insert(static_cast<Element>(i));
    if (lower_upper(p, a) == a) family.push_back(a);
  }
  sort_closed(family);
  return family;
}

ElementSet embed(const Poset& p, Element x) { return p.down(x); }

std::size_t dm_join(const Poset& p, const DMLattice& l, std::size_t a, std::size_t b) {
  return l.index_of(lower_upper(p, l.closed_sets[a] | l.closed_sets[b]));
}

DMLattice dm_lattice(const Poset& p) {
  p.require_antitone_involution();
  DMLattice l;
  l.closed_sets = dm_closed_sets(p);
  if (l.closed_sets.size() > kMaxElements)
    throw Error(ErrorKind::TooLarge, "completion has more than " + std::to_string(kMaxElements) + " closed sets");
  for (const ElementSet& c : l.closed_sets) l.star.push_back(l.index_of(lower_cone(p, apply_inv(p, c))));
  for (Element x = 0; x < p.size(); ++x) l.embed_map.push_back(l.index_of(embed(p, x)));
  const CheckReport r = check_dm_invariants(p, l);
  if (!r.holds()) throw std::logic_error("completion invariant fails: " + r.condition);
  return l;
}

CheckReport check_dm_invariants(const Poset& p, const DMLattice& l) {
  const std::size_t m = l.size();
  auto fail = [](std::string what, std::vector<std::size_t> w) {
    std::vector<Element> ws(w.begin(), w.end());
    return CheckReport::fail("completion/" + what, std::move(ws));
  };
  if (l.closed_sets.front() != lower_cone(p, p.universe()) || l.closed_sets.back() != p.universe())
    return fail("bounds", {0, m - 1});
  for (std::size_t i = 0; i < m; ++i)
    if (lower_upper(p, l.closed_sets[i]) != l.closed_sets[i]) return fail("fixpoint", {i});
  for (std::size_t i = 0; i < m; ++i) {
    if (l.star[l.star[i]] != i) return fail("star-involution", {i});
    for (std::size_t j = 0; j < m; ++j)
      if (l.leq(i, j) && !l.leq(l.star[j], l.star[i])) return fail("star-antitone", {i, j});
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const std::size_t j = dm_join(p, l, a, b);
      const ElementSet meet_set = l.closed_sets[a] & l.closed_sets[b];
      if (std::find(l.closed_sets.begin(), l.closed_sets.end(), meet_set) == l.closed_sets.end())
        return fail("meet-closed", {a, b});
      const std::size_t mt = l.index_of(meet_set);
      if (!l.leq(a, j) || !l.leq(b, j) || !l.leq(mt, a) || !l.leq(mt, b)) return fail("bounds-of-pair", {a, b});
      for (std::size_t c = 0; c < m; ++c) {
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(j, c)) return fail("least-upper", {a, b, c});
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, mt)) return fail("greatest-lower", {a, b, c});
      }
    }
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != l.leq(l.embed_map[x], l.embed_map[y])) return fail("embedding-order", {x, y});
    if (p.has_involution() && l.star[l.embed_map[x]] != l.embed_map[p.inv(x)]) return fail("embedding-star", {x});
  }
  return CheckReport::pass("completion");
}

std::string closed_set_name(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  });
  return out + "}";
}

ElementSet closed_set_from_name(const Poset& p, const std::string& name) {
  if (name.size() < 2 || name.front() != '{' || name.back() != '}')
    throw Error(ErrorKind::BadDocument, "closed-set name must be braced: " + name);
  ElementSet s;
  const std::string body = name.substr(1, name.size() - 2);
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    const std::size_t comma = body.find(',', start);
    const std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    s.insert(p.index(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

Poset lattice_as_poset(const Poset& p, const DMLattice& l) {
  const std::size_t m = l.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& c : l.closed_sets) names.push_back(closed_set_name(p, c));
  std::vector<ElementSet> down(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (l.leq(i, j)) down[j].insert(static_cast<Element>(i));
  std::vector<Element> inv(l.star.begin(), l.star.end());
  return Poset::from_down_sets(std::move(names), std::move(down), std::move(inv));
}

CompletionConsistency check_completion_consistency(const Poset& p) {
  p.require_antitone_involution();
  const DMLattice l = dm_lattice(p);
  const Poset lp = lattice_as_poset(p, l);
  CompletionConsistency r{is_consistent(p), is_consistent(lp), CheckReport::pass("completion-consistency")};
  if (r.poset_report.holds() != r.lattice_report.holds()) {
    const CheckReport& failing = r.poset_report.holds() ? r.lattice_report : r.poset_report;
    r.verdict = CheckReport::fail("completion-consistency", failing.witness, failing.evidence);
    r.verdict.note = r.poset_report.holds() ? "poset consistent but completion is not"
                                            : "completion consistent but poset is not";
  }
  return r;
}

} // namespace copo
