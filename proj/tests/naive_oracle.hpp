#pragma once

// Independent brute-force reference used to cross-check the library. It
// reads the poset JSON itself, keeps the order as a boolean matrix and
// scans cones element by element; nothing here touches the library's
// bitsets or closure code.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace oracle {

using Names = std::set<std::string>;
using Idx = std::vector<int>;

struct NaivePoset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le;
  std::vector<int> inv;

  int n() const { return static_cast<int>(names.size()); }
  int at(const std::string& s) const {
    for (int i = 0; i < n(); ++i)
      if (names[i] == s) return i;
    throw std::out_of_range("unknown element " + s);
  }
  int bottom() const {
    for (int i = 0; i < n(); ++i)
      if (std::all_of(le[i].begin(), le[i].end(), [](bool b) { return b; })) return i;
    throw std::logic_error("no bottom");
  }
  int top() const {
    for (int j = 0; j < n(); ++j) {
      bool ok = true;
      for (int i = 0; i < n(); ++i) ok = ok && le[i][j];
      if (ok) return j;
    }
    throw std::logic_error("no top");
  }
};

inline NaivePoset from_json(const nlohmann::json& doc) {
  NaivePoset p;
  for (const auto& e : doc["elements"]) p.names.push_back(e.get<std::string>());
  const int n = p.n();
  p.le.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.le[i][i] = true;
  for (const auto& c : doc["covers"]) p.le[p.at(c[0].get<std::string>())][p.at(c[1].get<std::string>())] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.le[i][k] && p.le[k][j]) p.le[i][j] = true;
  p.inv.assign(n, -1);
  if (doc.contains("involution"))
    for (const auto& [k, v] : doc["involution"].items()) {
      p.inv[p.at(k)] = p.at(v.get<std::string>());
      p.inv[p.at(v.get<std::string>())] = p.at(k);
    }
  return p;
}

inline NaivePoset load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return from_json(nlohmann::json::parse(f));
}

inline Idx L(const NaivePoset& p, const Idx& a) {
  Idx out;
  for (int z = 0; z < p.n(); ++z) {
    bool below = true;
    for (int x : a) below = below && p.le[z][x];
    if (below) out.push_back(z);
  }
  return out;
}

inline Idx U(const NaivePoset& p, const Idx& a) {
  Idx out;
  for (int z = 0; z < p.n(); ++z) {
    bool above = true;
    for (int x : a) above = above && p.le[x][z];
    if (above) out.push_back(z);
  }
  return out;
}

inline Idx join(Idx a, const Idx& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline Idx maximal(const NaivePoset& p, const Idx& a) {
  Idx out;
  for (int x : a) {
    bool top = true;
    for (int y : a) top = top && !(x != y && p.le[x][y]);
    if (top) out.push_back(x);
  }
  return out;
}

inline Idx minimal(const NaivePoset& p, const Idx& a) {
  Idx out;
  for (int x : a) {
    bool bot = true;
    for (int y : a) bot = bot && !(x != y && p.le[y][x]);
    if (bot) out.push_back(x);
  }
  return out;
}

inline Names names_of(const NaivePoset& p, const Idx& a) {
  Names out;
  for (int x : a) out.insert(p.names[x]);
  return out;
}

// Set-valued operators written straight from their definitions.
inline Idx odot_meet(const NaivePoset& p, int x, int y) {
  if (p.le[x][p.inv[y]]) return {p.bottom()};
  return maximal(p, L(p, {x, y}));
}
inline Idx arrow_meet(const NaivePoset& p, int x, int y) {
  if (p.le[x][y]) return {p.top()};
  return minimal(p, U(p, {p.inv[x], y}));
}
inline Idx odot_nested(const NaivePoset& p, int x, int y) {
  if (p.le[x][p.inv[y]]) return {p.bottom()};
  return maximal(p, L(p, join(U(p, {x, p.inv[y]}), {y})));
}
inline Idx arrow_nested(const NaivePoset& p, int x, int y) {
  if (p.le[x][y]) return {p.top()};
  return minimal(p, U(p, join({p.inv[x]}, L(p, {x, y}))));
}

inline bool consistent(const NaivePoset& p) {
  const int b = p.bottom(), t = p.top();
  Idx ref;
  bool have = false;
  for (int x = 0; x < p.n(); ++x) {
    if (x == b || x == t) continue;
    Idx c = L(p, {x, p.inv[x]});
    if (have && c != ref) return false;
    ref = c;
    have = true;
  }
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      if (x != b && y != b && L(p, {x, y}) == Idx{b}) return false;
  return true;
}

inline bool distributive(const NaivePoset& p) {
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      for (int z = 0; z < p.n(); ++z)
        if (L(p, join(U(p, {x, y}), {z})) != L(p, U(p, join(L(p, {x, z}), L(p, {y, z}))))) return false;
  return true;
}

inline bool modular(const NaivePoset& p) {
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      for (int z = 0; z < p.n(); ++z)
        if (p.le[x][z] && L(p, join(U(p, {x, y}), {z})) != L(p, U(p, join({x}, L(p, {y, z}))))) return false;
  return true;
}

inline bool strongly_modular(const NaivePoset& p) {
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      for (int z = 0; z < p.n(); ++z) {
        const Idx uxz = U(p, {x, z});
        if (L(p, join(U(p, {x, y}), uxz)) != L(p, U(p, join({x}, L(p, join({y}, uxz)))))) return false;
        const Idx lxz = L(p, {x, z});
        if (L(p, join(U(p, join(lxz, {y})), {z})) != L(p, U(p, join(lxz, L(p, {y, z}))))) return false;
      }
  return true;
}

// Every closed set L(A), found by trying all subsets A.
inline std::set<Idx> closed_sets(const NaivePoset& p) {
  std::set<Idx> out;
  for (long mask = 0; mask < (1L << p.n()); ++mask) {
    Idx a;
    for (int i = 0; i < p.n(); ++i)
      if ((mask >> i) & 1) a.push_back(i);
    out.insert(L(p, a));
  }
  return out;
}

// Labeled bounded posets of the given size with an antitone involution:
// element 0 is the bottom, size-1 the top, every relation among the inner
// elements and every involutive permutation is tried.
inline long count_labeled_structures(int size) {
  const int k = size - 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) pairs.emplace_back(i, j);
  long count = 0;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) r[pairs[b].first][pairs[b].second] = true;
    bool order = true;
    for (int i = 0; i < k && order; ++i)
      for (int j = 0; j < k && order; ++j) {
        if (i != j && r[i][j] && r[j][i]) order = false;
        for (int m = 0; m < k && order; ++m)
          if (r[i][j] && r[j][m] && !r[i][m]) order = false;
      }
    if (!order) continue;
    std::vector<std::vector<bool>> le(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i) {
      le[0][i] = true;
      le[i][size - 1] = true;
      le[i][i] = true;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) le[i + 1][j + 1] = r[i][j];
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int x = 0; x < size && ok; ++x) ok = perm[perm[x]] == x;
      for (int x = 0; x < size && ok; ++x)
        for (int y = 0; y < size && ok; ++y)
          if (le[x][y] && !le[perm[y]][perm[x]]) ok = false;
      if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return count;
}

} // namespace oracle
