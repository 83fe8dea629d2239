#include "copo/directoid.hpp"

#include <limits>

#include "copo/cones.hpp"

namespace copo {

Directoid::Directoid(std::vector<std::string> names, std::vector<Element> table,
                     std::optional<std::vector<Element>> inv)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))),
      table_(std::move(table)), inv_(std::move(inv)) {
  if (table_.size() != size() * size())
    throw Error(ErrorKind::NotPartialOrder, "operation table must be n x n");
  for (Element v : table_)
    if (v >= size()) throw Error(ErrorKind::UnknownElement, "operation table value out of range");
  if (inv_ && inv_->size() != size()) throw Error(ErrorKind::BadInvolution, "unary map is not total");
}

Element Directoid::inv(Element x) const {
  if (!inv_) throw Error(ErrorKind::NoInvolution, "directoid has no unary operation");
  return (*inv_)[x];
}

namespace {

Element choose(const Poset& p, Element x, Element y, const ChoicePolicy& policy) {
  const ElementSet cone = p.down(x) & p.down(y);
  if (policy.kind == ChoicePolicy::Kind::LowestIndexOfCone) return cone.first();
  if (policy.kind == ChoicePolicy::Kind::Explicit) {
    std::optional<Element> v;
    for (auto key : {std::pair{x, y}, std::pair{y, x}}) {
      auto it = policy.choices.find(key);
      if (it == policy.choices.end()) continue;
      if (v && *v != it->second)
        throw Error(ErrorKind::BadExplicitChoice, "asymmetric choice for {" + p.name(x) + "," + p.name(y) + "}");
      v = it->second;
    }
    if (v) {
      if (*v >= p.size() || !cone.contains(*v))
        throw Error(ErrorKind::BadExplicitChoice,
                    "choice for {" + p.name(x) + "," + p.name(y) + "} is not a common lower bound");
      return *v;
    }
  }
  return maximal_of(p, cone).first();
}

std::optional<Element> induced_bottom(const Directoid& d) {
  const auto n = static_cast<Element>(d.size());
  for (Element b = 0; b < n; ++b) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = d.meet(b, x) == b;
    if (ok) return b;
  }
  return std::nullopt;
}

std::optional<Element> induced_top(const Directoid& d) {
  const auto n = static_cast<Element>(d.size());
  for (Element t = 0; t < n; ++t) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = d.meet(x, t) == x;
    if (ok) return t;
  }
  return std::nullopt;
}

// M[x*n+y] = {z | z = (z ^ x) ^ (z ^ y)}
std::vector<ElementSet> membership_sets(const Directoid& d) {
  const auto n = static_cast<Element>(d.size());
  std::vector<ElementSet> m(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      ElementSet s;
      for (Element z = 0; z < n; ++z)
        if (membership_test(d, z, x, y)) s.insert(z);
      m[x * n + y] = s;
      m[y * n + x] = s;
    }
  }
  return m;
}

} // namespace

Directoid assign_directoid(const Poset& p, const ChoicePolicy& policy) {
  const auto n = static_cast<Element>(p.size());
  std::vector<Element> table(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v;
      if (p.leq(x, y)) v = x;
      else if (p.leq(y, x)) v = y;
      else v = choose(p, x, y, policy);
      table[x * n + y] = v;
    }
  }
  return Directoid(p.names(), std::move(table), p.involution());
}

Poset induced_poset(const Directoid& d) {
  const auto n = static_cast<Element>(d.size());
  std::vector<ElementSet> down(n);
  for (Element y = 0; y < n; ++y)
    for (Element x = 0; x < n; ++x)
      if (d.induced_leq(x, y)) down[y].insert(x);
  for (Element x = 0; x < n; ++x) {
    if (!down[x].contains(x)) throw Error(ErrorKind::NotPartialOrder, "induced relation is not reflexive");
    for (Element y = 0; y < n; ++y) {
      if (x != y && down[y].contains(x) && down[x].contains(y))
        throw Error(ErrorKind::NotPartialOrder, "induced relation is not antisymmetric");
      if (down[y].contains(x) && !down[x].is_subset_of(down[y]))
        throw Error(ErrorKind::NotPartialOrder, "induced relation is not transitive");
    }
  }
  return Poset::from_down_sets(d.names(), std::move(down), d.involution());
}

CheckReport check_directoid_axioms(const Directoid& d) {
  const auto n = static_cast<Element>(d.size());
  for (Element x = 0; x < n; ++x)
    if (d.meet(x, x) != x) return CheckReport::fail("directoid/idempotency", {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (d.meet(x, y) != d.meet(y, x)) return CheckReport::fail("directoid/commutativity", {x, y});
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element inner = d.meet(x, d.meet(y, z));
        if (d.meet(inner, z) != inner) return CheckReport::fail("directoid/weak-associativity", {x, y, z});
      }
    }
  }
  return CheckReport::pass("directoid");
}

CheckReport check_involution_identities(const Directoid& d) {
  if (!d.has_involution()) throw Error(ErrorKind::NoInvolution, "directoid has no unary operation");
  const auto n = static_cast<Element>(d.size());
  for (Element x = 0; x < n; ++x)
    if (d.inv(d.inv(x)) != x) return CheckReport::fail("double-negation", {x});
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (d.meet(d.inv(d.meet(x, y)), d.inv(y)) != d.inv(y)) return CheckReport::fail("antitone-law", {x, y});
    }
  }
  return CheckReport::pass("involution-identities");
}

CheckReport check_consistency_implications(const Directoid& d) {
  if (!d.has_involution()) throw Error(ErrorKind::NoInvolution, "directoid has no unary operation");
  const auto bottom = induced_bottom(d);
  const auto top = induced_top(d);
  if (!bottom || !top) throw Error(ErrorKind::NotBounded, "induced poset is not bounded");
  const auto n = static_cast<Element>(d.size());
  const auto m = membership_sets(d);
  auto inner = [&](Element x) { return x != *bottom && x != *top; };

  for (Element x = 0; x < n; ++x) {
    if (!inner(x)) continue;
    const ElementSet& mx = m[x * n + d.inv(x)];
    for (Element y = 0; y < n; ++y) {
      if (!inner(y)) continue;
      const ElementSet missing = mx - m[y * n + d.inv(y)];
      if (!missing.empty())
        return CheckReport::fail("complement-cone-transfer", {x, y, missing.first()});
    }
  }
  const ElementSet zero = ElementSet::single(*bottom);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (x != *bottom && y != *bottom && m[x * n + y].is_subset_of(zero))
        return CheckReport::fail("nonzero-meet-witness", {x, y});
    }
  }
  return CheckReport::pass("consistency-implications");
}

CheckReport check_distributivity_implication(const Directoid& d) {
  if (!d.has_involution()) throw Error(ErrorKind::NoInvolution, "directoid has no unary operation");
  const auto n = static_cast<Element>(d.size());
  const std::size_t nn = std::size_t{n} * n;

  std::vector<ElementSet> below(n);   // {w | w ^ u = w}
  std::vector<ElementSet> absorbs(n); // {s | s v v = s}
  for (Element u = 0; u < n; ++u) {
    for (Element w = 0; w < n; ++w) {
      if (d.meet(w, u) == w) below[u].insert(w);
      if (d.join(w, u) == w) absorbs[u].insert(w);
    }
  }
  // above[w] = {s | w ^ s = w}
  std::vector<ElementSet> above(n);
  for (Element w = 0; w < n; ++w)
    for (Element s = 0; s < n; ++s)
      if (d.meet(w, s) == w) above[w].insert(s);

  std::vector<ElementSet> w_part(nn, ElementSet::full(n)); // over x, y
  std::vector<ElementSet> s_part(nn, ElementSet::full(n)); // over x, z
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet& wp = w_part[x * n + y];
      ElementSet& sp = s_part[x * n + y];
      for (Element t = 0; t < n; ++t) {
        wp &= below[d.join(d.join(t, x), d.join(t, y))];
        sp &= absorbs[d.meet(d.meet(t, x), d.meet(t, y))];
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const ElementSet ws = w_part[x * n + y] & below[z];
        const ElementSet ss = s_part[x * n + z] & s_part[y * n + z];
        std::optional<CheckReport> failure;
        ws.for_each([&](Element w) {
          if (failure) return;
          const ElementSet bad = ss - above[w];
          if (!bad.empty())
            failure = CheckReport::fail("distributivity-implication", {w, bad.first(), x, y, z});
        });
        if (failure) return *failure;
      }
    }
  }
  return CheckReport::pass("distributivity-implication");
}

ElementSet lower_terms(const Directoid& d, Element x) {
  ElementSet out;
  for (Element z = 0; z < d.size(); ++z) out.insert(d.meet(z, x));
  return out;
}

ElementSet upper_terms(const Directoid& d, Element x) {
  ElementSet out;
  for (Element z = 0; z < d.size(); ++z) out.insert(d.join(z, x));
  return out;
}

ElementSet pair_lower_terms(const Directoid& d, Element x, Element y) {
  ElementSet out;
  for (Element z = 0; z < d.size(); ++z) out.insert(d.meet(d.meet(z, x), d.meet(z, y)));
  return out;
}

ElementSet pair_upper_terms(const Directoid& d, Element x, Element y, UpperPairForm form) {
  ElementSet out;
  for (Element t = 0; t < d.size(); ++t) {
    const Element a = d.join(t, x);
    const Element b = d.join(t, y);
    out.insert(form == UpperPairForm::JoinJoin ? d.join(a, b) : d.meet(a, b));
  }
  return out;
}

std::uint64_t count_directoids(const Poset& p) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      const std::uint64_t k = (p.down(x) & p.down(y)).size();
      if (count > kMax / k) return kMax;
      count *= k;
    }
  }
  return count;
}

DirectoidEnumerator::DirectoidEnumerator(const Poset& p, std::uint64_t budget)
    : current_(assign_directoid(p, ChoicePolicy::lowest_of_cone())) {
  count_ = count_directoids(p);
  if (count_ > budget)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(count_) + " directoids exceed the budget of " +
                                               std::to_string(budget));
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      slots_.push_back(Slot{x, y, (p.down(x) & p.down(y)).members(), 0});
    }
  }
}

bool DirectoidEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = slots_.size(); i-- > 0;) {
    Slot& s = slots_[i];
    if (++s.pos < s.options.size()) {
      current_.set(s.x, s.y, s.options[s.pos]);
      return true;
    }
    s.pos = 0;
    current_.set(s.x, s.y, s.options[0]);
  }
  done_ = true;
  return false;
}

std::vector<Directoid> all_directoids(const Poset& p, std::uint64_t budget) {
  DirectoidEnumerator e(p, budget);
  std::vector<Directoid> out;
  out.reserve(e.count());
  while (e.next()) out.push_back(e.current());
  return out;
}

namespace {

enum class Tri { False, True, Unknown };

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}

Tri tri_implies(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::True) return Tri::True;
  if (a == Tri::True && b == Tri::False) return Tri::False;
  return Tri::Unknown;
}

/// Membership in a predicate whose truth may depend on the directoid:
/// `sure` holds in every directoid, `maybe` in at least one candidate.
struct TriSet {
  ElementSet sure;
  ElementSet maybe;
};

/// Over-approximates every assigned directoid: a term evaluates to the set
/// of values it can take in any of them.
class AbstractDirectoid {
public:
  explicit AbstractDirectoid(const Poset& p) : p_(p), n_(static_cast<Element>(p.size())) {
    choices_.resize(std::size_t{n_} * n_);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (p.leq(x, y)) choices_[x * n_ + y] = ElementSet::single(x);
        else if (p.leq(y, x)) choices_[x * n_ + y] = ElementSet::single(y);
        else choices_[x * n_ + y] = p.down(x) & p.down(y);
      }
    }
  }

  const ElementSet& meet(Element x, Element y) const { return choices_[x * n_ + y]; }

  ElementSet meet(const ElementSet& a, const ElementSet& b) const {
    ElementSet out;
    a.for_each([&](Element x) { b.for_each([&](Element y) { out |= meet(x, y); }); });
    return out;
  }

  ElementSet inv(const ElementSet& a) const {
    ElementSet out;
    a.for_each([&](Element x) { out.insert(p_.inv(x)); });
    return out;
  }

  ElementSet join(const ElementSet& a, const ElementSet& b) const { return inv(meet(inv(a), inv(b))); }
  ElementSet join(Element x, Element y) const {
    return inv(meet(p_.inv(x), p_.inv(y)));
  }

  static Tri equals(const ElementSet& values, Element v) {
    if (!values.contains(v)) return Tri::False;
    return values.size() == 1 ? Tri::True : Tri::Unknown;
  }

private:
  const Poset& p_;
  Element n_;
  std::vector<ElementSet> choices_;
};

void add(TriSet& s, Element x, Tri t) {
  if (t != Tri::False) s.maybe.insert(x);
  if (t == Tri::True) s.sure.insert(x);
}

Tri consistency_symbolic(const Poset& p) {
  const AbstractDirectoid ad(p);
  const auto n = static_cast<Element>(p.size());
  Tri verdict = Tri::True;

  for (Element x = 0; x < n; ++x)
    if (p.inv(p.inv(x)) != x) return Tri::False;
  for (Element x = 0; x < n && verdict != Tri::False; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet lhs = ad.meet(ad.inv(ad.meet(x, y)), ElementSet::single(p.inv(y)));
      verdict = tri_and(verdict, AbstractDirectoid::equals(lhs, p.inv(y)));
    }
  }
  if (verdict == Tri::False) return verdict;

  std::vector<TriSet> m(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      TriSet& s = m[x * n + y];
      for (Element z = 0; z < n; ++z)
        add(s, z, AbstractDirectoid::equals(ad.meet(ad.meet(z, x), ad.meet(z, y)), z));
    }
  }
  auto inner = [&](Element x) { return x != p.bottom() && x != p.top(); };
  for (Element x = 0; x < n; ++x) {
    if (!inner(x)) continue;
    const TriSet& a = m[x * n + p.inv(x)];
    for (Element y = 0; y < n; ++y) {
      if (!inner(y)) continue;
      const TriSet& b = m[y * n + p.inv(y)];
      for (Element z = 0; z < n; ++z) {
        const Tri in_a = a.sure.contains(z) ? Tri::True : a.maybe.contains(z) ? Tri::Unknown : Tri::False;
        const Tri in_b = b.sure.contains(z) ? Tri::True : b.maybe.contains(z) ? Tri::Unknown : Tri::False;
        verdict = tri_and(verdict, tri_implies(in_a, in_b));
      }
    }
  }
  ElementSet nonzero = p.universe();
  nonzero.erase(p.bottom());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const TriSet& s = m[x * n + y];
      // "only z = 0 satisfies the equation": no nonzero z does
      Tri only_zero = Tri::Unknown;
      if (!s.maybe.intersects(nonzero)) only_zero = Tri::True;
      else if (s.sure.intersects(nonzero)) only_zero = Tri::False;
      const Tri conclusion = (x == p.bottom() || y == p.bottom()) ? Tri::True : Tri::False;
      verdict = tri_and(verdict, tri_implies(only_zero, conclusion));
    }
  }
  return verdict;
}

Tri distributivity_symbolic(const Poset& p) {
  const AbstractDirectoid ad(p);
  const auto n = static_cast<Element>(p.size());
  const std::size_t nn = std::size_t{n} * n;

  // w ^ u = w with u ranging over a value set
  auto meet_fixes = [&](Element w, const ElementSet& values) {
    Tri t = Tri::False;
    bool all = true;
    values.for_each([&](Element u) {
      const Tri e = AbstractDirectoid::equals(ad.meet(w, u), w);
      if (e != Tri::False) t = Tri::Unknown;
      if (e != Tri::True) all = false;
    });
    return all ? Tri::True : t;
  };
  auto join_fixes = [&](Element s, const ElementSet& values) {
    Tri t = Tri::False;
    bool all = true;
    values.for_each([&](Element v) {
      const Tri e = AbstractDirectoid::equals(ad.join(s, v), s);
      if (e != Tri::False) t = Tri::Unknown;
      if (e != Tri::True) all = false;
    });
    return all ? Tri::True : t;
  };

  std::vector<TriSet> w_part(nn);
  std::vector<TriSet> s_part(nn);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      std::vector<ElementSet> ups(n), lows(n);
      for (Element t = 0; t < n; ++t) {
        ups[t] = ad.join(ad.join(t, x), ad.join(t, y));
        lows[t] = ad.meet(ad.meet(t, x), ad.meet(t, y));
      }
      for (Element v = 0; v < n; ++v) {
        Tri wt = Tri::True;
        Tri st = Tri::True;
        for (Element t = 0; t < n; ++t) {
          wt = tri_and(wt, meet_fixes(v, ups[t]));
          st = tri_and(st, join_fixes(v, lows[t]));
        }
        add(w_part[x * n + y], v, wt);
        add(s_part[x * n + y], v, st);
      }
    }
  }

  Tri verdict = Tri::True;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        TriSet ws = w_part[x * n + y];
        TriSet below_z;
        for (Element w = 0; w < n; ++w) add(below_z, w, AbstractDirectoid::equals(ad.meet(w, z), w));
        ws.sure &= below_z.sure;
        ws.maybe &= below_z.maybe;
        TriSet ss{s_part[x * n + z].sure & s_part[y * n + z].sure,
                  s_part[x * n + z].maybe & s_part[y * n + z].maybe};
        ws.maybe.for_each([&](Element w) {
          const Tri premise_w = ws.sure.contains(w) ? Tri::True : Tri::Unknown;
          ss.maybe.for_each([&](Element s) {
            const Tri premise_s = ss.sure.contains(s) ? Tri::True : Tri::Unknown;
            const Tri conclusion = p.leq(w, s) ? Tri::True : Tri::False;
            verdict = tri_and(verdict, tri_implies(tri_and(premise_w, premise_s), conclusion));
          });
        });
      }
    }
  }
  return verdict;
}

template <typename Check>
FamilyResult enumerate_family(const Poset& p, std::uint64_t budget, Check check) {
  DirectoidEnumerator e(p, budget);
  FamilyResult r;
  r.method = FamilyResult::Method::Enumerated;
  r.family_size = e.count();
  while (e.next()) {
    if (check(e.current())) ++r.holding;
    else ++r.failing;
  }
  if (r.failing == 0) r.uniform = true;
  else if (r.holding == 0) r.uniform = false;
  return r;
}

bool consistency_holds(const Directoid& d) {
  return check_involution_identities(d).holds() && check_consistency_implications(d).holds();
}

bool distributivity_holds(const Directoid& d) { return check_distributivity_implication(d).holds(); }

} // namespace

FamilyResult consistency_by_enumeration(const Poset& p, std::uint64_t budget) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  return enumerate_family(p, budget, consistency_holds);
}

FamilyResult distributivity_by_enumeration(const Poset& p, std::uint64_t budget) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  return enumerate_family(p, budget, distributivity_holds);
}

FamilyResult consistency_over_all_directoids(const Poset& p, std::uint64_t budget) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  const Tri t = consistency_symbolic(p);
  if (t == Tri::Unknown) return consistency_by_enumeration(p, budget);
  FamilyResult r;
  r.family_size = count_directoids(p);
  r.uniform = t == Tri::True;
  return r;
}

FamilyResult distributivity_over_all_directoids(const Poset& p, std::uint64_t budget) {
  if (!p.has_involution()) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  const Tri t = distributivity_symbolic(p);
  if (t == Tri::Unknown) return distributivity_by_enumeration(p, budget);
  FamilyResult r;
  r.family_size = count_directoids(p);
  r.uniform = t == Tri::True;
  return r;
}

} // namespace copo
