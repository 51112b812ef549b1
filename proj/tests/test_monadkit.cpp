#include <catch2/catch_amalgamated.hpp>

#include "findual/instances.hpp"
#include "findual/monad.hpp"
#include "findual/relation.hpp"

using namespace findual;

namespace {

Monad<SetObj, SetMor> identity_monad() {
  Monad<SetObj, SetMor> t;
  t.name = "identity";
  t.base = finset_category();
  t.apply_obj = [](const SetObj& x) { return x; };
  t.apply_mor = [](const SetMor& f) { return f; };
  t.unit_at = [c = t.base](const SetObj& x) { return c.identity(x); };
  t.mult_at = [c = t.base](const SetObj& x) { return c.identity(x); };
  return t;
}

/// Powerset with multiplication deliberately replaced by intersection.
Monad<SetObj, SetMor> corrupted_powerset() {
  auto t = powerset_monad();
  t.name = "powerset/corrupted";
  t.mult_at = [](const SetObj& x) {
    auto lvl = powerset_level(x);
    auto lvl2 = powerset_level(lvl.space);
    std::vector<int> table;
    for (Mask family : lvl2.members) {
      Mask u = x->full_mask();
      for (int i = 0; i < lvl.space->size(); ++i)
        if ((family >> i) & 1) u &= lvl.members[static_cast<size_t>(i)];
      if (family == 0) u = 0;
      table.push_back(lvl.index_of(u));
    }
    return SetMor{lvl2.space, lvl.space, std::move(table)};
  };
  return t;
}

std::vector<SetMor> functions_between(const std::vector<SetObj>& objs) {
  std::vector<SetMor> ms;
  for (auto& x : objs)
    for (auto& y : objs)
      for (auto& f : all_functions(x, y)) ms.push_back(f);
  return ms;
}

Adjunction<SetObj, SetMor, SetObj, KleisliMor<SetObj, SetMor>> kleisli_adjunction(
    const Monad<SetObj, SetMor>& t) {
  Adjunction<SetObj, SetMor, SetObj, KleisliMor<SetObj, SetMor>> adj;
  adj.name = t.name + "/kleisli-adjunction";
  adj.base = t.base;
  adj.upper = kleisli_category(t);
  adj.f_obj = [](const SetObj& x) { return x; };
  adj.f_mor = [t](const SetMor& f) { return kleisli_left_adjoint(t, f); };
  adj.g_obj = [t](const SetObj& x) { return t.apply_obj(x); };
  adj.g_mor = [t](const KleisliMor<SetObj, SetMor>& f) { return kleisli_right_adjoint(t, f); };
  adj.unit_at = t.unit_at;
  adj.counit_at = [t](const SetObj& x) {
    // eps_X : TX -/-> X given by the identity base morphism on TX.
    return KleisliMor<SetObj, SetMor>{t.apply_obj(x), x, t.base.identity(t.apply_obj(x))};
  };
  return adj;
}

}  // namespace

TEST_CASE("monad law checker") {
  auto objs = std::vector<SetObj>{standard_finset(0), standard_finset(1), standard_finset(2)};
  auto mors = functions_between(objs);
  SECTION("identity monad passes vacuously") {
    CHECK(check_monad_laws(identity_monad(), objs, mors).all_ok());
  }
  SECTION("powerset passes on sets of size <= 2") {
    auto rep = check_monad_laws(powerset_monad(), objs, mors);
    CHECK(rep.all_ok());
    // e.g. m({{x0},{x0,x1}}) = {x0,x1} is covered by the table comparisons.
  }
  SECTION("filter passes on sets of size <= 2") {
    CHECK(check_monad_laws(filter_monad(), objs, mors).all_ok());
  }
  SECTION("corrupted multiplication fails with a witness") {
    auto rep = check_monad_laws(corrupted_powerset(), objs, mors);
    CHECK_FALSE(rep.all_ok());
    bool unit_or_assoc = false;
    for (auto& item : rep.items)
      if (!item.ok && (item.law == "unit-right" || item.law == "associativity" ||
                       item.law == "mult-naturality"))
        unit_or_assoc = true;
    CHECK(unit_or_assoc);
  }
}

TEST_CASE("kleisli construction for the powerset monad") {
  auto t = powerset_monad();
  auto one = standard_finset(1);
  auto two = standard_finset(2);

  SECTION("unit laws: e is the Kleisli identity") {
    for (auto& x : {one, two}) {
      auto px = t.apply_obj(x);
      for (auto& arrow : all_functions(x, px)) {
        KleisliMor<SetObj, SetMor> f{x, x, arrow};
        CHECK(kleisli_eq(t, kleisli_compose(t, kleisli_identity(t, x), f), f));
        CHECK(kleisli_eq(t, kleisli_compose(t, f, kleisli_identity(t, x)), f));
      }
    }
  }

  SECTION("kleisli composition matches relational composition on antichains") {
    auto a2 = antichain_poset(2, "x");
    auto lvl = powerset_level(two);
    auto to_kleisli = [&](const SpecRelation& r) {
      std::vector<int> table;
      for (int i = 0; i < 2; ++i) table.push_back(lvl.index_of(r.fibers[static_cast<size_t>(i)]));
      return KleisliMor<SetObj, SetMor>{two, two, SetMor{two, lvl.space, table}};
    };
    auto rels = all_spec_relations(a2, a2);
    CHECK(rels.size() == 16);  // hom-sets agree in size with maps into the powerset
    for (auto& r : rels)
      for (auto& s : rels) {
        auto via_kleisli = kleisli_compose(t, to_kleisli(r), to_kleisli(s));
        auto direct = to_kleisli(compose_rel(r, s));
        CHECK(kleisli_eq(t, via_kleisli, direct));
      }
  }

  SECTION("kleisli associativity, exhaustive at size 2") {
    auto px = t.apply_obj(two);
    std::vector<KleisliMor<SetObj, SetMor>> homs;
    for (auto& arrow : all_functions(two, px)) homs.push_back({two, two, arrow});
    for (auto& f : homs)
      for (auto& g : homs)
        for (auto& h : homs)
          CHECK(kleisli_eq(t, kleisli_compose(t, kleisli_compose(t, f, g), h),
                           kleisli_compose(t, f, kleisli_compose(t, g, h))));
  }

  SECTION("F_P sends a function to its graph") {
    auto f = SetMor{two, two, {1, 1}};
    auto kf = kleisli_left_adjoint(t, f);
    auto lvl = powerset_level(two);
    CHECK(kf.arrow.table == std::vector<int>{lvl.index_of(2), lvl.index_of(2)});
  }

  SECTION("G_P is direct image; G_T e = id") {
    auto px = t.apply_obj(two);
    for (auto& arrow : all_functions(two, px)) {
      KleisliMor<SetObj, SetMor> r{two, two, arrow};
      auto g = kleisli_right_adjoint(t, r);
      auto lvl = powerset_level(two);
      for (int a = 0; a < px->size(); ++a) {
        Mask expected = 0;
        for (int i = 0; i < 2; ++i)
          if ((lvl.members[static_cast<size_t>(a)] >> i) & 1)
            expected |= lvl.members[static_cast<size_t>(arrow.table[static_cast<size_t>(i)])];
        CHECK(lvl.members[static_cast<size_t>(g.table[static_cast<size_t>(a)])] == expected);
      }
    }
    CHECK(t.base.mor_eq(kleisli_right_adjoint(t, kleisli_identity(t, two)),
                        t.base.identity(t.apply_obj(two))));
  }

  SECTION("F_T is functorial on samples") {
    for (auto& f : all_functions(one, two))
      for (auto& g : all_functions(two, two)) {
        auto lhs = kleisli_left_adjoint(t, t.base.compose(g, f));
        auto rhs = kleisli_compose(t, kleisli_left_adjoint(t, f), kleisli_left_adjoint(t, g));
        CHECK(kleisli_eq(t, lhs, rhs));
      }
  }
}

TEST_CASE("adjunction triangle identities") {
  auto t = powerset_monad();
  auto objs = std::vector<SetObj>{standard_finset(0), standard_finset(1), standard_finset(2),
                                  standard_finset(3)};
  SECTION("the Kleisli adjunction of powerset passes") {
    auto adj = kleisli_adjunction(t);
    CHECK(check_adjunction(adj, objs, objs).all_ok());
  }
  SECTION("identity adjunction passes") {
    auto it = identity_monad();
    auto adj = kleisli_adjunction(it);
    CHECK(check_adjunction(adj, objs, objs).all_ok());
  }
  SECTION("corrupting the counit breaks a triangle") {
    auto adj = kleisli_adjunction(t);
    adj.counit_at = [t](const SetObj& x) {
      auto tx = t.apply_obj(x);
      // Constant-to-empty-set arrow instead of the identity on TX.
      auto lvl = powerset_level(x);
      std::vector<int> table(static_cast<size_t>(tx->size()), lvl.index_of(0));
      return KleisliMor<SetObj, SetMor>{tx, x, SetMor{tx, tx, table}};
    };
    auto rep = check_adjunction(adj, {standard_finset(1)}, {standard_finset(1)});
    CHECK_FALSE(rep.all_ok());
  }
}

TEST_CASE("Eilenberg-Moore algebra checks") {
  auto t = powerset_monad();
  SECTION("free algebras (TX, m_X) pass") {
    for (int n = 0; n <= 2; ++n) {
      auto x = standard_finset(n);
      EMAlgebra<SetObj, SetMor> alg{t.apply_obj(x), t.mult_at(x)};
      CHECK(check_em_algebra(t, alg).all_ok());
    }
  }
  SECTION("union-as-max on a 2-element carrier passes") {
    auto x = standard_finset(2);
    auto lvl = powerset_level(x);
    // x0 = 0, x1 = 1; empty set goes to 0, everything containing x1 goes to 1.
    std::vector<int> table;
    for (Mask m : lvl.members) table.push_back((m >> 1) & 1 ? 1 : 0);
    EMAlgebra<SetObj, SetMor> alg{x, SetMor{lvl.space, x, table}};
    CHECK(check_em_algebra(t, alg).all_ok());
  }
  SECTION("a constant structure map fails the unit law") {
    auto x = standard_finset(2);
    auto lvl = powerset_level(x);
    EMAlgebra<SetObj, SetMor> alg{x, SetMor{lvl.space, x, std::vector<int>(lvl.members.size(), 0)}};
    auto rep = check_em_algebra(t, alg);
    CHECK_FALSE(rep.all_ok());
  }
}

TEST_CASE("comparison functor into the Kleisli adjunction itself") {
  auto t = powerset_monad();
  auto adj = kleisli_adjunction(t);
  auto two = standard_finset(2);
  auto px = t.apply_obj(two);
  SECTION("C e_X is the Kleisli identity") {
    auto c = comparison_c(adj, kleisli_identity(t, two));
    CHECK(kleisli_eq(t, c, kleisli_identity(t, two)));
  }
  SECTION("C is functorial on samples") {
    std::vector<KleisliMor<SetObj, SetMor>> homs;
    for (auto& arrow : all_functions(two, px)) homs.push_back({two, two, arrow});
    for (auto& f : homs)
      for (auto& g : homs) {
        auto lhs = comparison_c(adj, kleisli_compose(t, f, g));
        auto rhs = kleisli_compose(t, comparison_c(adj, f), comparison_c(adj, g));
        CHECK(kleisli_eq(t, lhs, rhs));
      }
  }
}

TEST_CASE("induced monad morphism validation") {
  auto t = powerset_monad();
  auto objs = std::vector<SetObj>{standard_finset(0), standard_finset(1), standard_finset(2)};
  auto mors = functions_between(objs);
  SECTION("the identity left morphism induces the identity monad morphism") {
    LeftMorphismData<SetObj, SetMor> data{
        "identity", t, t, [t](const SetObj& x) { return t.base.identity(t.apply_obj(x)); }};
    CHECK_NOTHROW(induced_monad_morphism(data, objs, mors));
  }
  SECTION("a broken component family is rejected") {
    LeftMorphismData<SetObj, SetMor> data{
        "broken", t, t, [t](const SetObj& x) {
          auto lvl = powerset_level(x);
          std::vector<int> table(lvl.members.size(), 0);  // constant to empty set
          return SetMor{lvl.space, lvl.space, table};
        }};
    CHECK_THROWS_AS(induced_monad_morphism(data, objs, mors), NotAMonadMorphism);
  }
}
