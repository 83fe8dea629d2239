#include "copo/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "copo/directoid.hpp"
#include "copo/dm_completion.hpp"
#include "copo/json_io.hpp"
#include "copo/residuation.hpp"
#include "copo_builtins_data.hpp"

namespace copo {

std::string_view to_string(BuiltinId id) {
  switch (id) {
  case BuiltinId::Fig1: return "fig1";
  case BuiltinId::Fig2: return "fig2";
  case BuiltinId::Fig3: return "fig3";
  case BuiltinId::B4: return "b4";
  case BuiltinId::C5: return "c5";
  case BuiltinId::C2: return "c2";
  }
  return "?";
}

std::optional<BuiltinId> parse_builtin(std::string_view s) {
  for (BuiltinId id : kAllBuiltins)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

std::string_view builtin_document(BuiltinId id) {
  switch (id) {
  case BuiltinId::Fig1: return builtin_data::kFig1;
  case BuiltinId::Fig2: return builtin_data::kFig2;
  case BuiltinId::Fig3: return builtin_data::kFig3;
  case BuiltinId::B4: return builtin_data::kB4;
  case BuiltinId::C5: return builtin_data::kC5;
  case BuiltinId::C2: return builtin_data::kC2;
  }
  return {};
}

Poset builtin(BuiltinId id) { return poset_from_string(std::string(builtin_document(id))); }

// ---------------------------------------------------------------------------
// canonical forms

namespace {

using Encoding = std::vector<std::uint8_t>;

struct Structure {
  std::size_t n = 0;
  std::vector<ElementSet> down;
  std::optional<std::vector<Element>> inv;

  bool leq(Element x, Element y) const { return down[y].contains(x); }
};

std::vector<ElementSet> up_sets(const Structure& s) {
  std::vector<ElementSet> up(s.n);
  for (Element y = 0; y < s.n; ++y) s.down[y].for_each([&](Element x) { up[x].insert(y); });
  return up;
}

// Isomorphism-invariant coloring: start from (down size, up size) and refine
// by the colors of strict lower and upper neighbours and the partner.
std::vector<std::size_t> refined_colors(const Structure& s) {
  const auto up = up_sets(s);
  using Sig = std::vector<std::size_t>;
  auto rank = [](const std::vector<Sig>& sigs) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
      out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return std::make_pair(out, sorted.size());
  };

  std::vector<Sig> sigs(s.n);
  for (Element x = 0; x < s.n; ++x) sigs[x] = {s.down[x].size(), up[x].size()};
  auto [colors, classes] = rank(sigs);
  for (;;) {
    for (Element x = 0; x < s.n; ++x) {
      Sig sig{colors[x]};
      Sig lower, upper;
      s.down[x].for_each([&](Element y) {
        if (y != x) lower.push_back(colors[y]);
      });
      up[x].for_each([&](Element y) {
        if (y != x) upper.push_back(colors[y]);
      });
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      sig.push_back(lower.size());
      sig.insert(sig.end(), lower.begin(), lower.end());
      sig.push_back(upper.size());
      sig.insert(sig.end(), upper.begin(), upper.end());
      if (s.inv) sig.push_back(colors[(*s.inv)[x]]);
      sigs[x] = std::move(sig);
    }
    auto [next, next_classes] = rank(sigs);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

// Minimal encoding over color-respecting relabelings, by backtracking with
// prefix pruning. Position i contributes the partner code (1 + position of
// inv(x) if already placed, else 0) then two order bits per earlier position.
class Canonizer {
public:
  explicit Canonizer(const Structure& s) : s_(s), colors_(refined_colors(s)) {
    slot_color_ = colors_;
    std::sort(slot_color_.begin(), slot_color_.end());
    pos_of_.assign(s.n, kUnplaced);
  }

  std::pair<Encoding, std::vector<Element>> run() {
    search(0);
    return {best_, best_perm_};
  }

private:
  static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

  void chunk(std::size_t i, Element x, Encoding& out) const {
    if (s_.inv) {
      const std::size_t j = pos_of_[(*s_.inv)[x]];
      out.push_back(j == kUnplaced ? 0 : static_cast<std::uint8_t>(j + 1));
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Element y = perm_[j];
      out.push_back(static_cast<std::uint8_t>((s_.leq(y, x) ? 2 : 0) | (s_.leq(x, y) ? 1 : 0)));
    }
  }

  // Compares the whole prefix against the best encoding: the best may have
  // been replaced below a sibling, so a cached comparison would go stale.
  void search(std::size_t i) {
    if (i == s_.n) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (Element x = 0; x < s_.n; ++x) {
      if (pos_of_[x] != kUnplaced || colors_[x] != slot_color_[i]) continue;
      const std::size_t mark = current_.size();
      pos_of_[x] = i;
      perm_.push_back(x);
      chunk(i, x, current_);
      const bool prune =
          have_best_ && std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(current_.size()),
                                                     current_.begin(), current_.end());
      if (!prune) search(i + 1);
      current_.resize(mark);
      perm_.pop_back();
      pos_of_[x] = kUnplaced;
    }
  }

  const Structure& s_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> slot_color_;
  std::vector<std::size_t> pos_of_;
  std::vector<Element> perm_;
  Encoding current_;
  Encoding best_;
  std::vector<Element> best_perm_;
  bool have_best_ = false;
};

// perm[i] = old element placed at new position i
Structure relabel(const Structure& s, const std::vector<Element>& perm) {
  std::vector<Element> pos(s.n);
  for (std::size_t i = 0; i < s.n; ++i) pos[perm[i]] = static_cast<Element>(i);
  Structure out;
  out.n = s.n;
  out.down.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    s.down[perm[i]].for_each([&](Element x) { out.down[i].insert(pos[x]); });
  if (s.inv) {
    std::vector<Element> inv(s.n);
    for (std::size_t i = 0; i < s.n; ++i) inv[i] = pos[(*s.inv)[perm[i]]];
    out.inv = std::move(inv);
  }
  return out;
}

Encoding exact_encoding(const Structure& s) {
  Encoding e;
  for (Element x = 0; x < s.n; ++x) {
    if (s.inv) e.push_back(static_cast<std::uint8_t>((*s.inv)[x]));
    for (Element y = 0; y < s.n; ++y) e.push_back(s.leq(x, y) ? 1 : 0);
  }
  return e;
}

Structure structure_of(const Poset& p) {
  Structure s;
  s.n = p.size();
  for (Element x = 0; x < p.size(); ++x) s.down.push_back(p.down(x));
  s.inv = p.involution();
  return s;
}

std::vector<std::string> element_names(const Structure& s) {
  std::vector<std::string> names(s.n);
  char next = 'a';
  for (Element x = 0; x < s.n; ++x) {
    if (x == 0) {
      names[x] = "0";
    } else if (static_cast<std::size_t>(x) + 1 == s.n) {
      names[x] = "1";
    } else if (s.inv && (*s.inv)[x] < x && (*s.inv)[x] != 0) {
      names[x] = names[(*s.inv)[x]] + "'";
    } else {
      names[x] = std::string(1, next++);
    }
  }
  return names;
}

Poset to_poset(const Structure& s) {
  return Poset::from_down_sets(element_names(s), s.down, s.inv);
}

// Adds a bottom (index 0) and a top (index n+1) around an inner poset.
Structure bounded_from_inner(const std::vector<ElementSet>& inner) {
  const std::size_t k = inner.size();
  Structure s;
  s.n = k + 2;
  s.down.resize(s.n);
  s.down[0].insert(0);
  for (std::size_t i = 0; i < k; ++i) {
    ElementSet d = ElementSet::single(0);
    inner[i].for_each([&](Element x) { d.insert(static_cast<Element>(x + 1)); });
    s.down[i + 1] = d;
  }
  s.down[k + 1] = ElementSet::full(s.n);
  return s;
}

bool could_be_self_dual(const Structure& s) {
  const auto up = up_sets(s);
  std::vector<std::pair<std::size_t, std::size_t>> a, b;
  for (Element x = 0; x < s.n; ++x) {
    a.emplace_back(s.down[x].size(), up[x].size());
    b.emplace_back(up[x].size(), s.down[x].size());
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<std::vector<Element>> involutions_of(const Structure& s) {
  std::vector<std::vector<Element>> out;
  if (!could_be_self_dual(s)) return out;
  const auto up = up_sets(s);
  constexpr Element kFree = static_cast<Element>(-1);
  std::vector<Element> inv(s.n, kFree);

  auto consistent_at = [&](Element x) {
    for (Element a = 0; a < s.n; ++a) {
      if (inv[a] == kFree) continue;
      if (s.leq(a, x) != s.leq(inv[x], inv[a])) return false;
      if (s.leq(x, a) != s.leq(inv[a], inv[x])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, Element x) -> void {
    while (x < s.n && inv[x] != kFree) ++x;
    if (x == s.n) {
      out.push_back(inv);
      return;
    }
    for (Element y = x; y < s.n; ++y) {
      if (inv[y] != kFree || s.down[y].size() != up[x].size() || up[y].size() != s.down[x].size()) continue;
      inv[x] = y;
      inv[y] = x;
      if (consistent_at(x) && consistent_at(y)) self(self, static_cast<Element>(x + 1));
      inv[x] = kFree;
      inv[y] = kFree;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::mutex g_levels_mutex;
std::vector<std::vector<std::vector<ElementSet>>> g_levels;

} // namespace

std::vector<std::vector<ElementSet>> unlabeled_posets(std::size_t n) {
  if (n > kHardMaxSize) throw Error(ErrorKind::BudgetExceeded, "poset size above the enumeration cap");
  std::lock_guard lock(g_levels_mutex);
  if (g_levels.empty()) g_levels.push_back({{}});
  while (g_levels.size() <= n) {
    const std::size_t k = g_levels.size() - 1;
    std::map<Encoding, std::vector<ElementSet>> next;
    for (const auto& q : g_levels[k]) {
      // the new element sits on top of an order ideal of q
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        ElementSet ideal;
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1U) ideal.insert(static_cast<Element>(i));
        bool closed = true;
        ideal.for_each([&](Element x) { closed = closed && q[x].is_subset_of(ideal); });
        if (!closed) continue;
        Structure s;
        s.n = k + 1;
        s.down = q;
        ideal.insert(static_cast<Element>(k));
        s.down.push_back(ideal);
        auto [enc, perm] = Canonizer(s).run();
        if (!next.count(enc)) next.emplace(std::move(enc), relabel(s, perm).down);
      }
    }
    std::vector<std::vector<ElementSet>> level;
    level.reserve(next.size());
    for (auto& [enc, d] : next) level.push_back(std::move(d));
    g_levels.push_back(std::move(level));
  }
  return g_levels[n];
}

std::vector<std::uint8_t> canonical_form(const Poset& p) { return Canonizer(structure_of(p)).run().first; }

Poset canonical_poset(const Poset& p) {
  const Structure s = structure_of(p);
  const auto perm = Canonizer(s).run().second;
  const Structure c = relabel(s, perm);
  std::vector<std::string> names(s.n);
  for (std::size_t i = 0; i < s.n; ++i) names[i] = p.name(perm[i]);
  return Poset::from_down_sets(std::move(names), c.down, c.inv);
}

std::vector<std::vector<Element>> antitone_involutions(const Poset& p) {
  Structure s = structure_of(p);
  s.inv.reset();
  return involutions_of(s);
}

// ---------------------------------------------------------------------------
// enumeration

void validate_query(const EnumerationQuery& q) {
  if (q.max_size > kHardMaxSize)
    throw Error(ErrorKind::BudgetExceeded, "max size " + std::to_string(q.max_size) + " exceeds the hard cap of " +
                                               std::to_string(kHardMaxSize));
  if (q.max_size > kDefaultMaxSize && !q.allow_large)
    throw Error(ErrorKind::BudgetExceeded, "max size " + std::to_string(q.max_size) + " exceeds the default budget of " +
                                               std::to_string(kDefaultMaxSize) + " without an override");
  if (!q.up_to_iso && q.max_size > kLabeledMaxSize)
    throw Error(ErrorKind::BudgetExceeded,
                "labeled enumeration is limited to " + std::to_string(kLabeledMaxSize) + " elements");
}

namespace {

bool passes_filters(const Poset& p, const EnumerationQuery& q) {
  for (PropertyId id : q.require)
    if (!check_property(p, id).holds()) return false;
  for (PropertyId id : q.forbid)
    if (check_property(p, id).holds()) return false;
  return true;
}

// Every distinct relabeling of the inner elements, in first-seen order over
// permutations in lexicographic order.
template <typename F>
bool for_each_labeling(const Structure& s, F&& f) {
  const std::size_t k = s.n - 2;
  std::vector<Element> inner(k);
  std::iota(inner.begin(), inner.end(), Element{1});
  std::set<Encoding> seen;
  do {
    std::vector<Element> perm{0};
    perm.insert(perm.end(), inner.begin(), inner.end());
    perm.push_back(static_cast<Element>(s.n - 1));
    Structure r = relabel(s, perm);
    if (seen.insert(exact_encoding(r)).second && !f(r)) return false;
  } while (std::next_permutation(inner.begin(), inner.end()));
  return true;
}

template <typename F>
std::size_t enumerate_impl(const EnumerationQuery& q, bool with_involution, F&& yield) {
  validate_query(q);
  std::size_t count = 0;
  for (std::size_t size = std::max<std::size_t>(q.min_size, 2); size <= q.max_size; ++size) {
    for (const auto& inner : unlabeled_posets(size - 2)) {
      Structure base = bounded_from_inner(inner);
      std::vector<Structure> variants;
      if (with_involution) {
        std::set<Encoding> classes;
        for (auto& inv : involutions_of(base)) {
          Structure s = base;
          s.inv = std::move(inv);
          if (classes.insert(Canonizer(s).run().first).second) variants.push_back(std::move(s));
        }
      } else {
        variants.push_back(base);
      }
      for (const Structure& s : variants) {
        auto emit = [&](const Structure& r) {
          const Poset p = to_poset(r);
          if (!passes_filters(p, q)) return true;
          ++count;
          return yield(p);
        };
        const bool go_on = q.up_to_iso ? emit(s) : for_each_labeling(s, emit);
        if (!go_on) return count;
      }
    }
  }
  return count;
}

} // namespace

std::size_t enumerate(const EnumerationQuery& q, const std::function<bool(const Poset&)>& yield) {
  return enumerate_impl(q, true, yield);
}

std::vector<Poset> enumerate_all(const EnumerationQuery& q) {
  std::vector<Poset> out;
  enumerate(q, [&](const Poset& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::size_t enumerate_bounded_posets(const EnumerationQuery& q, const std::function<bool(const Poset&)>& yield) {
  for (PropertyId id : q.require)
    if (needs_involution(id)) throw std::invalid_argument("property needs an involution: " + std::string(to_string(id)));
  for (PropertyId id : q.forbid)
    if (needs_involution(id)) throw std::invalid_argument("property needs an involution: " + std::string(to_string(id)));
  return enumerate_impl(q, false, yield);
}

// ---------------------------------------------------------------------------
// sweeps

std::string_view to_string(SweepCheck c) {
  switch (c) {
  case SweepCheck::ConsistencyOverDirectoids: return "consistency-directoids";
  case SweepCheck::DistributivityOverDirectoids: return "distributivity-directoids";
  case SweepCheck::ResiduationMeet: return "residuation-meet";
  case SweepCheck::ResiduationNested: return "residuation-nested";
  case SweepCheck::CompletionConsistency: return "completion-consistency";
  case SweepCheck::ClosedSetsOracle: return "closed-sets-oracle";
  case SweepCheck::StrongImpliesModular: return "strong-implies-modular";
  case SweepCheck::DistributiveImpliesModular: return "distributive-implies-modular";
  case SweepCheck::DisjointPairComplements: return "disjoint-pair-complements";
  case SweepCheck::StructuralIffConsistent: return "structural-iff-consistent";
  case SweepCheck::DistributivityForms: return "distributivity-forms";
  }
  return "?";
}

std::optional<SweepCheck> parse_sweep_check(std::string_view s) {
  for (SweepCheck c : kAllSweepChecks)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

CheckReport family_agreement(const std::string& name, const FamilyResult& fam, bool expected) {
  if (fam.uniform && *fam.uniform == expected) return CheckReport::pass(name);
  CheckReport r = CheckReport::fail(name, {});
  if (!fam.uniform)
    r.note = "directoids disagree: " + std::to_string(fam.holding) + " hold, " + std::to_string(fam.failing) + " fail";
  else
    r.note = std::string("every directoid gives ") + (*fam.uniform ? "true" : "false") + ", poset gives " +
             (expected ? "true" : "false");
  return r;
}

CheckReport implication(const std::string& name, const CheckReport& antecedent, const CheckReport& consequent) {
  if (!antecedent.holds()) return CheckReport::not_applicable(name, "antecedent fails");
  if (consequent.holds()) return CheckReport::pass(name);
  CheckReport r = CheckReport::fail(name, consequent.witness, consequent.evidence);
  r.note = consequent.condition + " fails";
  return r;
}

} // namespace

CheckReport run_sweep_check(const Poset& p, SweepCheck c) {
  const std::string name(to_string(c));
  try {
    switch (c) {
    case SweepCheck::ConsistencyOverDirectoids:
      return family_agreement(name, consistency_over_all_directoids(p), is_consistent(p).holds());
    case SweepCheck::DistributivityOverDirectoids:
      return family_agreement(name, distributivity_over_all_directoids(p), is_distributive(p).holds());
    case SweepCheck::ResiduationMeet:
    case SweepCheck::ResiduationNested: {
      const auto v = c == SweepCheck::ResiduationMeet ? OperatorVariant::Meet : OperatorVariant::Nested;
      CheckReport r = certify_residuation(p, v).verdict;
      r.condition = name;
      return r;
    }
    case SweepCheck::CompletionConsistency: return check_completion_consistency(p).verdict;
    case SweepCheck::ClosedSetsOracle: {
      if (p.size() > 20) return CheckReport::not_applicable(name, "too large for the subset scan");
      if (dm_closed_sets(p) == dm_closed_sets_by_fixpoint(p)) return CheckReport::pass(name);
      CheckReport r = CheckReport::fail(name, {});
      r.note = "closure and subset scan differ";
      return r;
    }
    case SweepCheck::StrongImpliesModular: return implication(name, is_strongly_modular(p), is_modular(p));
    case SweepCheck::DistributiveImpliesModular: return implication(name, is_distributive(p), is_modular(p));
    case SweepCheck::DisjointPairComplements: {
      if (!is_distributive(p).holds()) return CheckReport::not_applicable(name, "not distributive");
      CheckReport r = check_disjoint_pair_complements(p);
      r.condition = name;
      return r;
    }
    case SweepCheck::StructuralIffConsistent: {
      if (p.size() < 3) return CheckReport::not_applicable(name, "fewer than 3 elements");
      const CheckReport a = is_consistent(p);
      const CheckReport b = structural_characterization(p);
      if (a.holds() == b.holds()) return CheckReport::pass(name);
      const CheckReport& failing = a.holds() ? b : a;
      CheckReport r = CheckReport::fail(name, failing.witness, failing.evidence);
      r.note = a.holds() ? "consistent but not structured" : "structured but not consistent";
      return r;
    }
    case SweepCheck::DistributivityForms: {
      const auto forms = distributivity_forms(p);
      if (std::all_of(forms.begin(), forms.end(), [&](bool f) { return f == forms[0]; })) return CheckReport::pass(name);
      CheckReport r = CheckReport::fail(name, {});
      r.note = "forms disagree";
      return r;
    }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return CheckReport::not_applicable(name, e.what());
    throw;
  }
  throw std::invalid_argument("unknown sweep check");
}

std::size_t SweepReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

namespace {

struct SweepState {
  SweepReport report;
  const std::vector<SweepCheck>& checks;
  std::size_t max_kept;

  SweepState(const std::vector<SweepCheck>& c, std::size_t k) : checks(c), max_kept(k) {
    for (SweepCheck check : checks) report.tallies.push_back({check});
  }

  void visit(const Poset& p) {
    ++report.structures;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      CheckReport r = run_sweep_check(p, checks[i]);
      auto& t = report.tallies[i];
      if (r.verdict == Verdict::NotApplicable) continue;
      ++t.applicable;
      if (r.fails()) {
        if (t.violations < max_kept) report.violations.push_back({checks[i], p, std::move(r)});
        ++t.violations;
      }
    }
  }
};

} // namespace

SweepReport sweep(const EnumerationQuery& q, const std::vector<SweepCheck>& checks, std::size_t max_kept) {
  SweepState st(checks, max_kept);
  enumerate(q, [&](const Poset& p) {
    st.visit(p);
    return true;
  });
  return st.report;
}

SweepReport sweep(const std::vector<Poset>& corpus, const std::vector<SweepCheck>& checks, std::size_t max_kept) {
  SweepState st(checks, max_kept);
  for (const Poset& p : corpus) st.visit(p);
  return st.report;
}

SearchResult search_first(const EnumerationQuery& q, bool with_involution) {
  validate_query(q);
  SearchResult result;
  EnumerationQuery all = q;
  all.require.clear();
  all.forbid.clear();
  auto look = [&](const Poset& p) {
    ++result.examined;
    if (!passes_filters(p, q)) return true;
    result.witness = p;
    return false;
  };
  for (std::size_t size = std::max<std::size_t>(q.min_size, 2); size <= q.max_size; ++size) {
    all.min_size = all.max_size = size;
    if (with_involution)
      enumerate(all, look);
    else
      enumerate_bounded_posets(all, look);
    if (result.witness) return result;
    result.bound_reached = size;
  }
  return result;
}

} // namespace copo
