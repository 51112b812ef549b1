#include <catch2/catch_amalgamated.hpp>

#include "findual/lattice.hpp"

using namespace findual;

namespace {
LatticePtr three_chain_lattice() { return downset_lattice(chain_poset(2)); }
LatticePtr diamond_lattice() { return downset_lattice(antichain_poset(2)); }
}  // namespace

TEST_CASE("downset_lattice builds JX") {
  SECTION("empty poset gives the one-element lattice") {
    auto l = downset_lattice(empty_poset());
    CHECK(l->size() == 1);
    CHECK(l->bottom() == l->top());
  }
  SECTION("2-chain gives the 3-chain") {
    auto l = three_chain_lattice();
    CHECK(l->size() == 3);
    CHECK(l->le(l->bottom(), 1));
    CHECK(l->le(1, l->top()));
  }
  SECTION("2-antichain gives the diamond") {
    auto l = diamond_lattice();
    CHECK(l->size() == 4);
    CHECK(l->join(1, 2) == l->top());
    CHECK(l->meet(1, 2) == l->bottom());
  }
}

TEST_CASE("from_order validates lattice structure") {
  SECTION("a valid explicit diamond") {
    auto p = build_poset({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
    CHECK_NOTHROW(DistLattice::from_order(*p));
  }
  SECTION("2-antichain is not a lattice") {
    CHECK_THROWS_AS(DistLattice::from_order(*antichain_poset(2)), NotALattice);
  }
  SECTION("M3 is rejected as non-distributive") {
    auto p = build_poset({"0", "a", "b", "c", "1"},
                         {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    CHECK_THROWS_AS(DistLattice::from_order(*p), NotDistributive);
  }
}

TEST_CASE("join_irreducibles recovers the generating poset") {
  SECTION("3-chain to 2-chain") {
    auto ji = join_irreducibles(*three_chain_lattice());
    CHECK(ji.poset->size() == 2);
    CHECK(ji.poset->lt(0, 1));
  }
  SECTION("diamond to 2-antichain") {
    auto ji = join_irreducibles(*diamond_lattice());
    CHECK(ji.poset->size() == 2);
    CHECK(ji.poset->is_antichain_poset());
  }
  SECTION("one-element lattice to the empty poset") {
    CHECK(join_irreducibles(*downset_lattice(empty_poset())).poset->size() == 0);
  }
}

TEST_CASE("Birkhoff round trips") {
  std::vector<PosetPtr> posets = {
      empty_poset(), singleton_poset(), chain_poset(2), antichain_poset(2), chain_poset(3),
      build_poset({"a", "b", "c"}, {{"a", "b"}}), antichain_poset(3),
      build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}),
      build_poset({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}})};
  for (auto& p : posets) {
    auto l = downset_lattice(p);
    auto ji = join_irreducibles(*l);
    REQUIRE(poset_iso(*ji.poset, *p).has_value());
    auto l2 = downset_lattice(ji.poset);
    REQUIRE(lattice_iso(*l2, *l).has_value());
  }
}

TEST_CASE("classify_map computes exact preservation classes") {
  auto l = three_chain_lattice();
  SECTION("identity has all four flags") {
    CHECK(identity_lattice_map(l).flags == kFullHomomorphism);
  }
  SECTION("constant-to-bottom preserves bottom and joins") {
    auto f = classify_map(l, l, std::vector<int>(3, l->bottom()));
    CHECK(f.has(kHemimorphism));
    CHECK_FALSE(f.has(kPreservesTop));
  }
  SECTION("count of hemimorphisms 3-chain -> 3-chain is 6, by brute force") {
    CHECK(all_lattice_maps_brute(l, l, kHemimorphism).size() == 6);
  }
  SECTION("flags are stable under composition") {
    auto maps = all_lattice_maps_brute(l, l, 0);
    REQUIRE(maps.size() == 27);
    for (auto& f : maps)
      for (auto& g : maps) {
        auto gf = compose_lattice_maps(g, f);
        std::uint8_t common = f.flags & g.flags;
        CHECK((gf.flags & common) == common);
      }
  }
}

TEST_CASE("is_boolean finds complements exactly for antichain-generated lattices") {
  CHECK(is_boolean(diamond_lattice()).has_value());
  CHECK_FALSE(is_boolean(three_chain_lattice()).has_value());
  CHECK(is_boolean(downset_lattice(empty_poset())).has_value());
  std::vector<PosetPtr> posets = {singleton_poset(), chain_poset(2), antichain_poset(2),
                                  chain_poset(3), antichain_poset(3), antichain_poset(4),
                                  build_poset({"a", "b", "c"}, {{"a", "b"}})};
  for (auto& p : posets) {
    CHECK(is_boolean(downset_lattice(p)).has_value() == p->is_antichain_poset());
  }
  SECTION("witness satisfies the complement laws") {
    auto w = is_boolean(downset_lattice(antichain_poset(3)));
    REQUIRE(w.has_value());
    auto& l = *w->lattice;
    for (int x = 0; x < l.size(); ++x) {
      CHECK(l.join(x, w->complement[static_cast<size_t>(x)]) == l.top());
      CHECK(l.meet(x, w->complement[static_cast<size_t>(x)]) == l.bottom());
    }
  }
}

TEST_CASE("lattice_iso") {
  auto l = three_chain_lattice();
  SECTION("reflexive") {
    auto iso = lattice_iso(*l, *l);
    REQUIRE(iso.has_value());
    CHECK(*iso == std::vector<int>{0, 1, 2});
  }
  SECTION("3-chain and diamond are not isomorphic") {
    CHECK_FALSE(lattice_iso(*l, *diamond_lattice()).has_value());
  }
  SECTION("downset lattices are isomorphic iff the posets are") {
    std::vector<PosetPtr> posets = {empty_poset(), singleton_poset(), chain_poset(2),
                                    antichain_poset(2), chain_poset(3), antichain_poset(3),
                                    build_poset({"a", "b", "c"}, {{"a", "b"}}),
                                    build_poset({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}})};
    for (auto& p : posets)
      for (auto& q : posets) {
        bool piso = poset_iso(*p, *q).has_value();
        bool liso = lattice_iso(*downset_lattice(p), *downset_lattice(q)).has_value();
        CHECK(piso == liso);
      }
  }
}

TEST_CASE("hemimorphism enumeration agrees with brute force") {
  std::vector<LatticePtr> lats = {downset_lattice(empty_poset()), two_element_lattice(),
                                  three_chain_lattice(), diamond_lattice(),
                                  downset_lattice(build_poset({"a", "b", "c"}, {{"a", "b"}}))};
  for (auto& l : lats)
    for (auto& m : lats) {
      if (std::pow(m->size(), l->size()) > 2e6) continue;
      auto fast = enumerate_hemimorphisms(l, m);
      auto brute = all_lattice_maps_brute(l, m, kHemimorphism);
      REQUIRE(fast.size() == brute.size());
      for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].table == brute[i].table);

      auto fast_meet = enumerate_meet_hemimorphisms(l, m);
      auto brute_meet = all_lattice_maps_brute(l, m, kMeetHemimorphism);
      REQUIRE(fast_meet.size() == brute_meet.size());
      for (size_t i = 0; i < fast_meet.size(); ++i) CHECK(fast_meet[i].table == brute_meet[i].table);

      auto fast_full = enumerate_full_homs(l, m);
      auto brute_full = all_lattice_maps_brute(l, m, kFullHomomorphism);
      REQUIRE(fast_full.size() == brute_full.size());
    }
}
