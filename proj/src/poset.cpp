#include "copo/poset.hpp"

#include <unordered_map>

namespace copo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::CycleDetected: return "CycleDetected";
  case ErrorKind::NotBounded: return "NotBounded";
  case ErrorKind::BadInvolution: return "BadInvolution";
  case ErrorKind::UnknownElement: return "UnknownElement";
  case ErrorKind::DuplicateElement: return "DuplicateElement";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::NoInvolution: return "NoInvolution";
  case ErrorKind::NotAntitone: return "NotAntitone";
  case ErrorKind::NotComparable: return "NotComparable";
  case ErrorKind::TooSmall: return "TooSmall";
  case ErrorKind::NotDistributive: return "NotDistributive";
  case ErrorKind::BadExplicitChoice: return "BadExplicitChoice";
  case ErrorKind::NotPartialOrder: return "NotPartialOrder";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

std::optional<Element> Poset::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

Element Poset::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement, "no element named '" + std::string(name) + "'");
}

Element Poset::inv(Element x) const {
  if (!inv_) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  return (*inv_)[x];
}

void Poset::require_antitone_involution() const {
  if (!inv_) throw Error(ErrorKind::NoInvolution, "poset has no unary operation");
  if (!antitone_) throw Error(ErrorKind::NotAntitone, "unary operation is not antitone");
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      // y covers x iff nothing lies strictly between them
      ElementSet between = up_[x] & down_[y];
      if (between.size() == 2) out.emplace_back(x, y);
    }
  }
  return out;
}

Poset Poset::from_down_sets(std::vector<std::string> names, std::vector<ElementSet> down,
                            std::optional<std::vector<Element>> inv) {
  const std::size_t n = names.size();
  if (n > kMaxElements)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceeds the limit of " +
                                         std::to_string(kMaxElements));
  if (down.size() != n) throw Error(ErrorKind::NotPartialOrder, "relation size mismatch");

  Poset p;
  p.names_ = std::move(names);
  p.down_ = std::move(down);
  p.up_.assign(n, ElementSet{});
  for (std::size_t y = 0; y < n; ++y)
    p.down_[y].for_each([&](Element x) { p.up_[x].insert(static_cast<Element>(y)); });

  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    if (!p.down_[x].contains(ex)) throw Error(ErrorKind::NotPartialOrder, "relation is not reflexive");
    bool cycle = false;
    p.down_[x].for_each([&](Element y) {
      if (y != ex && p.down_[y].contains(ex)) cycle = true;
    });
    if (cycle) throw Error(ErrorKind::CycleDetected, "order relation contains a cycle through '" + p.names_[x] + "'");
  }

  const ElementSet all = ElementSet::full(n);
  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (p.up_[x] == all) {
      p.bottom_ = static_cast<Element>(x);
      found_bottom = true;
    }
    if (p.down_[x] == all) {
      p.top_ = static_cast<Element>(x);
      found_top = true;
    }
  }
  if (!found_bottom) throw Error(ErrorKind::NotBounded, "no least element");
  if (!found_top) throw Error(ErrorKind::NotBounded, "no greatest element");

  if (inv) {
    if (inv->size() != n) throw Error(ErrorKind::BadInvolution, "unary map is not total");
    for (std::size_t x = 0; x < n; ++x) {
      const Element y = (*inv)[x];
      if (y >= n || (*inv)[y] != x)
        throw Error(ErrorKind::BadInvolution, "unary map is not an involution at '" + p.names_[x] + "'");
    }
    bool antitone = true;
    for (std::size_t y = 0; y < n && antitone; ++y) {
      p.down_[y].for_each([&](Element x) {
        if (!p.leq((*inv)[y], (*inv)[x])) antitone = false;
      });
    }
    p.antitone_ = antitone;
  }
  p.inv_ = std::move(inv);
  return p;
}

Poset build_poset(const std::vector<std::string>& elements, const std::vector<NamePair>& covers,
                  const std::optional<NameMap>& inv) {
  const std::size_t n = elements.size();
  if (n > kMaxElements)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceeds the limit of " +
                                         std::to_string(kMaxElements));
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], static_cast<Element>(i)).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, "no element named '" + s + "'");
    return it->second;
  };

  // up-closure then transitive closure, one bitset row per element
  std::vector<ElementSet> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i].insert(static_cast<Element>(i));
  for (const auto& [lo, hi] : covers) {
    const Element a = lookup(lo);
    const Element b = lookup(hi);
    if (a == b) throw Error(ErrorKind::CycleDetected, "element '" + lo + "' covers itself");
    down[b].insert(a);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (down[j].contains(static_cast<Element>(k))) down[j] |= down[k];
    }
  }

  std::optional<std::vector<Element>> map;
  if (inv) {
    std::vector<Element> m(n, static_cast<Element>(n));
    for (const auto& [from, to] : *inv) {
      auto f = index.find(from);
      auto t = index.find(to);
      if (f == index.end() || t == index.end())
        throw Error(ErrorKind::BadInvolution, "involution mentions unknown element '" +
                                                  (f == index.end() ? from : to) + "'");
      m[f->second] = t->second;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == n) {
        // a one-sided listing x -> y also defines y -> x
        bool filled = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (m[j] == i) {
            m[i] = static_cast<Element>(j);
            filled = true;
            break;
          }
        }
        if (!filled) throw Error(ErrorKind::BadInvolution, "no image for '" + elements[i] + "'");
      }
    }
    map = std::move(m);
  }
  return Poset::from_down_sets(elements, std::move(down), std::move(map));
}

Poset with_involution(const Poset& p, std::optional<std::vector<Element>> inv) {
  std::vector<ElementSet> down(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) down[i] = p.down(static_cast<Element>(i));
  return Poset::from_down_sets(p.names(), std::move(down), std::move(inv));
}

} // namespace copo
