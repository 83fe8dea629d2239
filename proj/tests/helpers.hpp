#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "copo/corpus.hpp"
#include "copo/json_io.hpp"
#include "naive_oracle.hpp"

namespace testing {

inline std::string data_path(const std::string& id) { return std::string(COPO_DATA_DIR) + "/builtins/" + id + ".json"; }

inline copo::ElementSet set_of(const copo::Poset& p, std::initializer_list<const char*> names) {
  copo::ElementSet s;
  for (const char* n : names) s.insert(p.index(n));
  return s;
}

inline oracle::Names names(const copo::Poset& p, const copo::ElementSet& s) {
  oracle::Names out;
  s.for_each([&](copo::Element x) { out.insert(p.name(x)); });
  return out;
}

inline oracle::NaivePoset naive(const copo::Poset& p) { return oracle::from_json(copo::poset_to_json(p)); }

/// Builtins plus every enumerated structure up to `max_size`.
inline std::vector<copo::Poset> corpus(std::size_t max_size) {
  copo::EnumerationQuery q;
  q.max_size = max_size;
  q.allow_large = max_size > copo::kDefaultMaxSize;
  auto out = copo::enumerate_all(q);
  for (auto id : copo::kAllBuiltins) out.push_back(copo::builtin(id));
  return out;
}

/// Same order and involution under a random relabeling, bottom and top
/// moved as well.
inline copo::Poset shuffled(const copo::Poset& p, std::mt19937& rng) {
  std::vector<copo::Element> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<copo::Element>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  // perm[old] = new
  std::vector<std::string> names(p.size());
  std::vector<copo::ElementSet> down(p.size());
  std::optional<std::vector<copo::Element>> inv;
  if (p.has_involution()) inv.emplace(p.size());
  for (copo::Element x = 0; x < p.size(); ++x) {
    names[perm[x]] = p.name(x);
    p.down(x).for_each([&](copo::Element y) { down[perm[x]].insert(perm[y]); });
    if (inv) (*inv)[perm[x]] = perm[p.inv(x)];
  }
  return copo::Poset::from_down_sets(names, down, inv);
}

} // namespace testing
