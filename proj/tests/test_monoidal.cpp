#include <catch2/catch_amalgamated.hpp>

#include "findual/monoidal.hpp"

using namespace findual;

namespace {
std::vector<PosetPtr> size2_posets() {
  std::vector<PosetPtr> out;
  for (auto& e : poset_catalog(2)) out.push_back(e.poset);
  return out;
}
}  // namespace

TEST_CASE("the product of two singletons in the relational category") {
  auto one = singleton_poset();
  auto prod = specrel_product(one, one);
  SECTION("is the 2-antichain") {
    CHECK(prod.sum.sum->size() == 2);
    CHECK(prod.sum.sum->is_antichain_poset());
  }
  SECTION("hom counts separate the product from the topological product") {
    CHECK(all_spec_relations(one, prod.sum.sum).size() == 4);
    auto tensor = poset_product(one, one).product;
    CHECK(all_spec_relations(one, tensor).size() == 2);
  }
}

TEST_CASE("product and coproduct universal properties, exhaustive at size <= 2") {
  auto posets = size2_posets();
  for (auto& z : posets)
    for (auto& x1 : posets)
      for (auto& x2 : posets) {
        auto prod = specrel_product(x1, x2);
        auto rels1 = all_spec_relations(z, x1);
        auto rels2 = all_spec_relations(z, x2);
        auto candidates = all_spec_relations(z, prod.sum.sum);
        for (auto& r : rels1)
          for (auto& s : rels2) {
            auto t = pairing(r, s, prod.sum);
            CHECK(compose_rel(t, prod.proj1) == r);
            CHECK(compose_rel(t, prod.proj2) == s);
            int mediators = 0;
            for (auto& cand : candidates)
              if (compose_fibers(cand, prod.proj1) == r.fibers &&
                  compose_fibers(cand, prod.proj2) == s.fibers)
                ++mediators;
            CHECK(mediators == 1);
          }
        // Coproduct side: lower graphs of the injections, copairing mediates.
        auto i1 = lower_graph(prod.sum.inj1);
        auto i2 = lower_graph(prod.sum.inj2);
        auto back1 = all_spec_relations(x1, z);
        auto back2 = all_spec_relations(x2, z);
        auto cocands = all_spec_relations(prod.sum.sum, z);
        for (auto& r : back1)
          for (auto& s : back2) {
            auto u = copairing(r, s, prod.sum);
            CHECK(compose_rel(i1, u) == r);
            CHECK(compose_rel(i2, u) == s);
            int mediators = 0;
            for (auto& cand : cocands)
              if (compose_fibers(i1, cand) == r.fibers && compose_fibers(i2, cand) == s.fibers)
                ++mediators;
            CHECK(mediators == 1);
          }
      }
}

TEST_CASE("pairing degenerate cases") {
  auto c2 = chain_poset(2);
  auto none = empty_poset();
  SECTION("pairing with an empty-target relation behaves as the left relation") {
    auto r = identity_relation(c2);
    auto s = empty_relation(c2, none);
    auto sum = poset_sum(c2, none);
    auto t = pairing(r, s, sum);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) CHECK(t.contains(x, y) == r.contains(x, y));
  }
  SECTION("pairing of empty relations is empty") {
    auto sum = poset_sum(c2, c2);
    CHECK(pairing(empty_relation(c2, c2), empty_relation(c2, c2), sum).pair_count() == 0);
  }
}

TEST_CASE("tensor of relations") {
  auto c2 = chain_poset(2);
  SECTION("identity tensor identity is the identity on the product") {
    auto t = tensor_rel(identity_relation(c2), identity_relation(c2));
    auto prod = poset_product(c2, c2);
    CHECK(t == identity_relation(prod.product));
  }
  SECTION("tensor with an empty factor is empty") {
    auto t = tensor_rel(empty_relation(c2, c2), full_relation(c2, c2));
    CHECK(t.pair_count() == 0);
  }
  SECTION("interchange with composition, exhaustive at size <= 2") {
    auto a2 = antichain_poset(2);
    for (auto& p : {c2, a2}) {
      auto rels = all_spec_relations(p, p);
      auto prod = poset_product(p, p);
      for (auto& r : rels)
        for (auto& rp : rels)
          for (auto& s : rels)
            for (auto& sp : rels) {
              auto lhs = compose_rel(tensor_rel(r, s, prod, prod), tensor_rel(rp, sp, prod, prod));
              auto rhs = tensor_rel(compose_rel(r, rp), compose_rel(s, sp), prod, prod);
              CHECK(lhs == rhs);
            }
    }
  }
}

TEST_CASE("V turns sums into products") {
  SECTION("with the empty summand") {
    auto iso = vietoris_sum_iso(chain_poset(2), empty_poset());
    CHECK(iso.forward.source->size() == 3);
    CHECK(iso.forward.target->size() == 3);
  }
  SECTION("two singletons: four closed sets on each side") {
    auto iso = vietoris_sum_iso(singleton_poset("p"), singleton_poset("q"));
    CHECK(iso.forward.source->size() == 4);
    CHECK(iso.forward.target->size() == 4);
  }
  SECTION("the explicit maps are mutually inverse for all pairs of size <= 3") {
    std::vector<PosetPtr> posets;
    for (auto& e : poset_catalog(3)) posets.push_back(e.poset);
    for (auto& x1 : posets)
      for (auto& x2 : posets) {
        auto iso = vietoris_sum_iso(x1, x2);
        CHECK(compose_maps(iso.backward, iso.forward) == identity_map(iso.forward.source));
        CHECK(compose_maps(iso.forward, iso.backward) == identity_map(iso.backward.source));
      }
  }
}

TEST_CASE("the rectangle map is left adjoint to the projection pairing") {
  SECTION("rectangles are fixed points") {
    auto rep = vietoris_prod_adjunction(chain_poset(2), chain_poset(2));
    CHECK(rep.all_ok());
  }
  SECTION("a non-rectangular up-set of the grid maps to the full square") {
    auto c2 = chain_poset(2);
    auto prod = poset_product(c2, c2);
    // W = {(c0,c1),(c1,c0),(c1,c1)}: an up-set missing the bottom corner.
    Mask w = 0;
    w |= Mask{1} << prod.pair_index(0, 1);
    w |= Mask{1} << prod.pair_index(1, 0);
    w |= Mask{1} << prod.pair_index(1, 1);
    REQUIRE(prod.product->is_up_set(w));
    Mask pa = 0, pb = 0;
    for (int k = 0; k < 4; ++k)
      if ((w >> k) & 1) {
        pa |= Mask{1} << prod.coords[static_cast<size_t>(k)].first;
        pb |= Mask{1} << prod.coords[static_cast<size_t>(k)].second;
      }
    CHECK(pa == c2->full_mask());
    CHECK(pb == c2->full_mask());  // the rectangle over W is the full square
  }
  SECTION("pointwise inequalities for all pairs of size <= 2") {
    for (auto& x1 : size2_posets())
      for (auto& x2 : size2_posets()) CHECK(vietoris_prod_adjunction(x1, x2).all_ok());
  }
}

TEST_CASE("lattice tensor") {
  SECTION("2 tensor 2 is the two-element lattice over a single point") {
    auto two = two_element_lattice();
    auto t = lattice_tensor(two, two);
    CHECK(t.product.product->size() == 1);
    CHECK(t.tensor_lattice->size() == 2);
  }
  SECTION("3-chain tensor 3-chain is the 6-element lattice of grid down-sets") {
    auto three = downset_lattice(chain_poset(2));
    auto t = lattice_tensor(three, three);
    CHECK(t.tensor_lattice->size() == 6);
  }
  SECTION("tensoring with the one-element lattice collapses") {
    auto t = lattice_tensor(downset_lattice(chain_poset(2)), downset_lattice(empty_poset()));
    CHECK(t.tensor_lattice->size() == 1);
  }
  SECTION("the canonicalized route agrees with the presented route") {
    // Feed carrier-only copies so the tensor has to recover the posets.
    auto jx = downset_lattice(chain_poset(2));
    auto stripped = lattice_from_order(jx->carrier());
    auto t1 = lattice_tensor(jx, jx);
    auto t2 = lattice_tensor(stripped, stripped);
    CHECK(lattice_iso(*t1.tensor_lattice, *t2.tensor_lattice).has_value());
  }
}

TEST_CASE("bimorphism factorization") {
  auto c2 = chain_poset(2);
  auto jx = downset_lattice(c2);
  auto t = lattice_tensor(jx, jx);
  SECTION("the universal bimorphism factors through the identity") {
    auto fbar = factor_bimorphism(t.universal, t);
    CHECK(fbar == identity_lattice_map(t.tensor_lattice));
  }
  SECTION("meet as a bimorphism factors through J of the diagonal") {
    std::vector<int> table;
    for (int a = 0; a < jx->size(); ++a)
      for (int b = 0; b < jx->size(); ++b) table.push_back(jx->meet(a, b));
    auto f = check_bimorphism(jx, jx, jx, std::move(table));
    auto fbar = factor_bimorphism(f, t);
    auto viaJ = J_spec(diag_rel(c2, t.product), t.tensor_lattice, jx);
    CHECK(fbar.table == viaJ.table);
  }
  SECTION("every bimorphism at the small cap factors uniquely") {
    for (auto& x : size2_posets())
      for (auto& y : size2_posets()) {
        auto l = downset_lattice(x), m = downset_lattice(y);
        auto pack = lattice_tensor(l, m);
        for (auto& z : size2_posets()) {
          auto n = downset_lattice(z);
          auto hemis = enumerate_hemimorphisms(pack.tensor_lattice, n);
          for (auto& f : enumerate_bimorphisms(l, m, n)) {
            auto fbar = factor_bimorphism(f, pack);
            int count = 0;
            for (auto& h : hemis) {
              bool factors = true;
              for (int a = 0; a < l->size() && factors; ++a)
                for (int b = 0; b < m->size(); ++b)
                  if (h.apply(pack.universal.apply(a, b)) != f.apply(a, b)) {
                    factors = false;
                    break;
                  }
              if (factors) {
                ++count;
                CHECK(h.table == fbar.table);
              }
            }
            CHECK(count == 1);
          }
        }
      }
  }
}

TEST_CASE("diagonal and terminal structure") {
  auto c2 = chain_poset(2);
  SECTION("the diagonal of a singleton is the identity") {
    auto one = singleton_poset();
    auto d = diag_rel(one);
    CHECK(d.pair_count() == 1);
  }
  SECTION("J of the terminal relation is the bottom/top embedding of 2") {
    auto j = J_spec(bang_rel(c2), downset_lattice(singleton_poset()), downset_lattice(c2));
    auto jx = downset_lattice(c2);
    CHECK(j.apply(0) == jx->bottom());
    CHECK(j.apply(1) == jx->top());
  }
  SECTION("J of the diagonal composed with the universal bimorphism is meet") {
    for (auto& e : poset_catalog(3)) {
      auto jx = downset_lattice(e.poset);
      auto t = lattice_tensor(jx, jx);
      auto jdiag = J_spec(diag_rel(e.poset, t.product), t.tensor_lattice, jx);
      for (int a = 0; a < jx->size(); ++a)
        for (int b = 0; b < jx->size(); ++b)
          CHECK(jdiag.apply(t.universal.apply(a, b)) == jx->meet(a, b));
    }
  }
}

TEST_CASE("property dictionary") {
  auto c2 = chain_poset(2);
  auto a2 = antichain_poset(2);
  SECTION("full relations are total; empty relations on nonempty sources are not") {
    DictionaryContext ctx(c2, c2);
    auto full = is_total(full_relation(c2, c2), ctx);
    CHECK(full.agree());
    CHECK(full.relational);
    auto none = is_total(empty_relation(c2, c2), ctx);
    CHECK(none.agree());
    CHECK_FALSE(none.relational);
  }
  SECTION("lower graphs are partial maps") {
    DictionaryContext ctx(a2, c2);
    for (auto& f : all_monotone_maps(a2, c2)) {
      auto rep = is_partial_map(lower_graph(f), ctx);
      CHECK(rep.agree());
      CHECK(rep.smallest_element);
    }
  }
  SECTION("the full fiber over a 2-antichain is not a partial map") {
    DictionaryContext ctx(a2, a2);
    auto rep = is_partial_map(full_relation(a2, a2), ctx);
    CHECK(rep.agree());
    CHECK_FALSE(rep.smallest_element);
    CHECK_FALSE(rep.down_directed);
  }
  SECTION("joint successors: total partner wins, empty pairs fail") {
    DictionaryContext ctx(c2, c2);
    auto r = full_relation(c2, c2);
    for (auto& s : all_spec_relations(c2, c2)) {
      auto rep = joint_successor(r, s, ctx);
      CHECK(rep.agree());
      CHECK(rep.relational);
    }
    auto none = joint_successor(empty_relation(c2, c2), empty_relation(c2, c2), ctx);
    CHECK(none.agree());
    CHECK_FALSE(none.relational);
  }
}
