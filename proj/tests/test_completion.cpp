#include <doctest.h>

#include "copo/dm_completion.hpp"
#include "helpers.hpp"

using namespace copo;

TEST_CASE("closed sets match the naive subset scan") {
  for (const Poset& p : testing::corpus(8)) {
    const auto np = testing::naive(p);
    std::set<oracle::Names> expected;
    for (const auto& c : oracle::closed_sets(np)) expected.insert(oracle::names_of(np, c));
    std::set<oracle::Names> got;
    for (const auto& c : dm_closed_sets(p)) got.insert(testing::names(p, c));
    CHECK(got == expected);
    CHECK(dm_closed_sets(p) == dm_closed_sets_by_fixpoint(p));
  }
}

TEST_CASE("completion of the first figure") {
  const Poset p = builtin(BuiltinId::Fig1);
  const DMLattice l = dm_lattice(p);
  CHECK(l.size() == oracle::closed_sets(testing::naive(p)).size());
  CHECK(check_dm_invariants(p, l).holds());
  const Poset lp = lattice_as_poset(p, l);
  CHECK(is_lattice(lp).holds());
  CHECK(lp.antitone());
  // the pair b, c gets a least upper bound
  const std::size_t j = dm_join(p, l, l.embed_map[p.index("b")], l.embed_map[p.index("c")]);
  CHECK(l.closed_sets[j] == testing::set_of(p, {"0", "a", "b", "c"}));
}

TEST_CASE("completion invariants across the corpus") {
  for (const Poset& p : testing::corpus(8)) {
    const DMLattice l = dm_lattice(p);
    CHECK(check_dm_invariants(p, l).holds());
    CHECK(l.closed_sets.front() == p.down(p.bottom()));
    CHECK(l.closed_sets.back() == p.universe());
  }
}

TEST_CASE("consistency is preserved and reflected by the completion") {
  for (const Poset& p : testing::corpus(8)) {
    const CompletionConsistency c = check_completion_consistency(p);
    CHECK(c.verdict.holds());
    CHECK(c.poset_report.holds() == c.lattice_report.holds());
  }
}

TEST_CASE("closed-set names are reversible") {
  const Poset p = builtin(BuiltinId::Fig3);
  for (const ElementSet& c : dm_closed_sets(p)) CHECK(closed_set_from_name(p, closed_set_name(p, c)) == c);
  CHECK(closed_set_name(p, testing::set_of(p, {"0", "a"})) == "{0,a}");
  CHECK_THROWS_AS(closed_set_from_name(p, "0,a"), Error);
  CHECK_THROWS_AS(closed_set_from_name(p, "{0,zz}"), Error);
}

TEST_CASE("a broken star map is caught") {
  const Poset p = builtin(BuiltinId::Fig1);
  DMLattice l = dm_lattice(p);
  std::swap(l.star[1], l.star[2]);
  CHECK(check_dm_invariants(p, l).fails());
}

TEST_CASE("completion requires an antitone involution") {
  const Poset bare = build_poset({"0", "1"}, {{"0", "1"}});
  CHECK_THROWS_AS(dm_lattice(bare), Error);
}
