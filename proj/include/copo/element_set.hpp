#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace copo {

/// Index of an element inside its owning Poset (input order).
using Element = std::uint16_t;

/// Largest universe an ElementSet can address. Posets are capped at this
/// size on construction; the same cap applies to Dedekind-MacNeille
/// lattices reinterpreted as posets.
inline constexpr std::size_t kMaxElements = 256;

/// Dense bit-indexed subset of a poset universe.
///
/// Fixed capacity of kMaxElements bits stored inline, so sets are trivially
/// copyable and comparisons are four word operations. Sets carry no
/// reference to their poset; callers keep them within the universe.
class ElementSet {
public:
  static constexpr std::size_t kWords = kMaxElements / 64;

  constexpr ElementSet() = default;

  static ElementSet full(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (n >= (w + 1) * 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > w * 64) {
        s.words_[w] = (std::uint64_t{1} << (n - w * 64)) - 1;
      }
    }
    return s;
  }

  static ElementSet single(Element x) {
    ElementSet s;
    s.insert(x);
    return s;
  }

  static ElementSet of(std::initializer_list<Element> xs) {
    ElementSet s;
    for (Element x : xs) s.insert(x);
    return s;
  }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest member; only meaningful when !empty().
  Element first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    return static_cast<Element>(kMaxElements);
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the bitmask, most significant word first.
  friend bool bitmask_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Element>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace copo
