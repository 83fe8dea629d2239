#include <doctest.h>

#include "copo/cones.hpp"
#include "helpers.hpp"

using namespace copo;
using testing::names;
using testing::set_of;

TEST_CASE("cones on the first figure") {
  const Poset p = builtin(BuiltinId::Fig1);
  auto e = [&](const char* s) { return p.index(s); };
  CHECK(names(p, lower_cone(p, e("d"), e("e'"))) == oracle::Names{"0", "a"});
  CHECK(names(p, upper_cone(p, e("b"), e("d"))) == oracle::Names{"a'", "1"});
  CHECK(names(p, minimal_of(p, upper_cone(p, e("b"), e("c")))) == oracle::Names{"d'", "e'"});
  CHECK(names(p, p.down(e("b'"))) == oracle::Names{"0", "a", "d", "e", "b'"});
}

TEST_CASE("cones on the third figure") {
  const Poset p = builtin(BuiltinId::Fig3);
  auto e = [&](const char* s) { return p.index(s); };
  CHECK(names(p, p.down(e("d'"))) == oracle::Names{"0", "a", "b", "c", "e", "f", "d'"});
  CHECK(names(p, upper_cone(p, e("f'"), e("b"))) == oracle::Names{"c'", "a'", "1"});
  CHECK(names(p, maximal_of(p, lower_cone(p, e("c"), e("f")))) == oracle::Names{"c"});
}

TEST_CASE("cones of the empty set are the whole poset") {
  const Poset p = builtin(BuiltinId::Fig2);
  CHECK(lower_cone(p, ElementSet{}) == p.universe());
  CHECK(upper_cone(p, ElementSet{}) == p.universe());
}

TEST_CASE("cones agree with the naive scanner on random subsets") {
  std::mt19937 rng(7);
  for (const Poset& p : testing::corpus(7)) {
    const auto np = testing::naive(p);
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet a;
      oracle::Idx ai;
      for (Element x = 0; x < p.size(); ++x)
        if (rng() % 3 == 0) {
          a.insert(x);
          ai.push_back(x);
        }
      CHECK(testing::names(p, lower_cone(p, a)) == oracle::names_of(np, oracle::L(np, ai)));
      CHECK(testing::names(p, upper_cone(p, a)) == oracle::names_of(np, oracle::U(np, ai)));
      CHECK(testing::names(p, maximal_of(p, a)) == oracle::names_of(np, oracle::maximal(np, ai)));
      CHECK(testing::names(p, minimal_of(p, a)) == oracle::names_of(np, oracle::minimal(np, ai)));
    }
  }
}

TEST_CASE("Galois connection laws") {
  std::mt19937 rng(11);
  for (const Poset& p : testing::corpus(6)) {
    for (int trial = 0; trial < 30; ++trial) {
      ElementSet a, b;
      for (Element x = 0; x < p.size(); ++x) {
        if (rng() % 2) a.insert(x);
        if (rng() % 4 == 0) b.insert(x);
      }
      b |= a;
      CHECK(a.is_subset_of(lower_upper(p, a)));
      CHECK(a.is_subset_of(upper_lower(p, a)));
      CHECK(lower_upper(p, lower_cone(p, a)) == lower_cone(p, a));
      CHECK(upper_lower(p, upper_cone(p, a)) == upper_cone(p, a));
      // antitone in the argument
      CHECK(lower_cone(p, b).is_subset_of(lower_cone(p, a)));
      CHECK(upper_cone(p, b).is_subset_of(upper_cone(p, a)));
      // the involution swaps the two cones
      CHECK(apply_inv(p, lower_cone(p, a)) == upper_cone(p, apply_inv(p, a)));
    }
  }
}

TEST_CASE("set order and antichains") {
  const Poset p = builtin(BuiltinId::Fig1);
  CHECK(set_leq(p, set_of(p, {"b"}), set_of(p, {"d'", "e'"})));
  CHECK_FALSE(set_leq(p, set_of(p, {"b", "d"}), set_of(p, {"d'"})));
  CHECK(is_antichain(p, set_of(p, {"b", "c", "d", "e"})));
  CHECK_FALSE(is_antichain(p, set_of(p, {"a", "b"})));
  CHECK(atoms(p) == set_of(p, {"a"}));
  CHECK(interval(p, p.index("a"), p.index("a'")) == (p.universe() - set_of(p, {"0", "1"})));
  CHECK_THROWS_AS(interval(p, p.index("b"), p.index("c")), Error);
}

TEST_CASE("none of the figures is a lattice") {
  const Poset f1 = builtin(BuiltinId::Fig1);
  const Poset f2 = builtin(BuiltinId::Fig2);
  const Poset f3 = builtin(BuiltinId::Fig3);
  for (const Poset* p : {&f1, &f2, &f3}) {
    const CheckReport r = is_lattice(*p);
    REQUIRE(r.fails());
    REQUIRE(r.witness.size() == 2);
    const PairBounds b = pair_bounds(*p, r.witness[0], r.witness[1]);
    CHECK((b.minimal_upper.size() > 1 || b.maximal_lower.size() > 1));
  }
  CHECK(pair_bounds(f1, f1.index("b"), f1.index("c")).minimal_upper == set_of(f1, {"d'", "e'"}));
  CHECK(pair_bounds(f2, f2.index("c"), f2.index("d")).minimal_upper == set_of(f2, {"b'", "e'"}));
  CHECK(pair_bounds(f3, f3.index("b"), f3.index("e")).minimal_upper == set_of(f3, {"c'", "d'"}));
  CHECK(is_lattice(builtin(BuiltinId::B4)).holds());
  CHECK(is_lattice(builtin(BuiltinId::C5)).holds());
}

TEST_CASE("antitone involution check") {
  for (BuiltinId id : kAllBuiltins) CHECK(is_antitone_involution(builtin(id)).holds());
  const Poset p = build_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}},
                              NameMap{{"0", "1"}, {"a", "a"}, {"b", "b"}});
  const CheckReport r = is_antitone_involution(p);
  CHECK(r.fails());
  CHECK(r.witness.size() == 2);
}
