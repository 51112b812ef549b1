#include <catch2/catch_amalgamated.hpp>

#include "findual/poset.hpp"

using namespace findual;

TEST_CASE("build_poset closes transitively and validates") {
  SECTION("empty") {
    auto p = build_poset({}, {});
    CHECK(p->size() == 0);
  }
  SECTION("single cover closes to a 2-chain") {
    auto p = build_poset({"a", "b"}, {{"a", "b"}});
    CHECK(p->le(0, 1));
    CHECK_FALSE(p->le(1, 0));
    CHECK(p->le(0, 0));
  }
  SECTION("chains close transitively") {
    auto p = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p->le(0, 2));
  }
  SECTION("2-cycle is rejected") {
    CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), AntisymmetryViolation);
  }
  SECTION("unknown label is rejected") {
    CHECK_THROWS_AS(build_poset({"a"}, {{"a", "z"}}), UnknownLabel);
  }
  SECTION("duplicate labels are rejected") {
    CHECK_THROWS_AS(build_poset({"a", "a"}, {}), Error);
  }
}

TEST_CASE("down_sets and up_sets enumerate opens and closed sets") {
  SECTION("empty poset has the single empty subset") {
    auto d = down_sets(empty_poset());
    REQUIRE(d.size() == 1);
    CHECK(d[0].mask == 0);
  }
  SECTION("2-chain") {
    auto p = build_poset({"a", "b"}, {{"a", "b"}});
    auto d = down_sets(p);
    REQUIRE(d.size() == 3);
    CHECK(d[0].label() == "{}");
    CHECK(d[1].label() == "{a}");
    CHECK(d[2].label() == "{a,b}");
    auto u = up_sets(p);
    REQUIRE(u.size() == 3);
    CHECK(u[0].label() == "{}");
    CHECK(u[1].label() == "{b}");
    CHECK(u[2].label() == "{a,b}");
  }
  SECTION("2-antichain is discrete: every subset is open") {
    auto p = antichain_poset(2);
    CHECK(down_sets(p).size() == 4);
    CHECK(up_sets(p).size() == 4);
  }
  SECTION("singleton") {
    auto u = up_sets(singleton_poset());
    REQUIRE(u.size() == 2);
  }
}

TEST_CASE("down-sets and up-sets are complement-dual") {
  for (auto& p : {chain_poset(3), antichain_poset(3), build_poset({"a", "b", "c"}, {{"a", "b"}}),
                  build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}})}) {
    auto d = down_set_masks(*p);
    auto u = up_set_masks(*p);
    REQUIRE(d.size() == u.size());
    Mask full = p->full_mask();
    for (Mask m : d) CHECK(p->is_up_set(full & ~m));
    for (Mask m : u) CHECK(p->is_down_set(full & ~m));
  }
}

TEST_CASE("monotone map validation") {
  auto chain = chain_poset(2);
  auto anti = antichain_poset(2);
  CHECK_THROWS_AS(make_monotone(chain, anti, {0, 1}), NotMonotone);
  CHECK_NOTHROW(make_monotone(chain, anti, {0, 0}));
  CHECK_NOTHROW(make_monotone(anti, chain, {1, 0}));
}

TEST_CASE("all_monotone_maps enumerates exactly the monotone tables") {
  auto chain = chain_poset(2);
  auto anti = antichain_poset(2);
  CHECK(all_monotone_maps(chain, chain).size() == 3);
  CHECK(all_monotone_maps(chain, anti).size() == 2);   // constants only
  CHECK(all_monotone_maps(anti, chain).size() == 4);   // all tables
  CHECK(all_monotone_maps(empty_poset(), chain).size() == 1);
  CHECK(all_monotone_maps(chain, empty_poset()).empty());
}

TEST_CASE("poset_sum is a disjoint union with injections") {
  SECTION("singleton + singleton is the 2-antichain") {
    auto s = poset_sum(singleton_poset("p"), singleton_poset("q"));
    CHECK(s.sum->size() == 2);
    CHECK(s.sum->is_antichain_poset());
  }
  SECTION("X + empty is isomorphic to X") {
    auto x = chain_poset(3);
    auto s = poset_sum(x, empty_poset());
    REQUIRE(poset_iso(*s.sum, *x).has_value());
  }
  SECTION("2-chain + singleton has exactly one strict pair") {
    auto s = poset_sum(chain_poset(2), singleton_poset());
    int strict = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (s.sum->lt(i, j)) ++strict;
    CHECK(strict == 1);
  }
  SECTION("label clashes are namespaced") {
    auto s = poset_sum(singleton_poset("x"), singleton_poset("x"));
    CHECK(s.sum->label(0) == "1:x");
    CHECK(s.sum->label(1) == "2:x");
  }
}

TEST_CASE("poset_product is the componentwise order") {
  SECTION("1 x X is isomorphic to X") {
    auto x = chain_poset(3);
    auto pr = poset_product(singleton_poset(), x);
    REQUIRE(poset_iso(*pr.product, *x).has_value());
  }
  SECTION("2-chain squared is the 2x2 grid with 6 down-sets") {
    auto pr = poset_product(chain_poset(2), chain_poset(2));
    CHECK(pr.product->size() == 4);
    CHECK(down_set_masks(*pr.product).size() == 6);
  }
  SECTION("empty x X is empty") {
    CHECK(poset_product(empty_poset(), chain_poset(2)).product->size() == 0);
  }
}

TEST_CASE("poset_iso finds order isomorphisms") {
  auto grid = poset_product(chain_poset(2), chain_poset(2)).product;
  auto diamond = build_poset({"b", "l", "r", "t"}, {{"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}});
  CHECK(poset_iso(*grid, *diamond).has_value());
  CHECK_FALSE(poset_iso(*chain_poset(4), *diamond).has_value());
  auto iso = poset_iso(*chain_poset(3), *chain_poset(3));
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<int>{0, 1, 2});
}
