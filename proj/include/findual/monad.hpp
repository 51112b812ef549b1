#pragma once

#include <functional>
#include <string>
#include <vector>

#include "findual/errors.hpp"

namespace findual {

/// Law-check outcome for one (law, object) pair. Failures carry a witness
/// element so that every report line can be replayed as a regression test.
struct CheckItem {
  std::string law;
  std::string object;
  bool ok = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string law, std::string object, bool ok, std::string witness = "") {
    items.push_back(CheckItem{std::move(law), std::move(object), ok, std::move(witness)});
  }
  void merge(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
  bool all_ok() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& i : items) n += i.ok ? 0 : 1;
    return n;
  }
};

/// An intensional view of a category: objects and morphisms are opaque value
/// types, all structure is callable. Object classes are infinite, so "for
/// all" claims are checked over generated catalogs of instances.
template <class Obj, class Mor>
struct CategoryOps {
  std::string object_kind;
  std::function<bool(const Obj&, const Obj&)> obj_eq;
  std::function<bool(const Mor&, const Mor&)> mor_eq;
  std::function<std::string(const Obj&)> obj_name;
  std::function<Obj(const Mor&)> source;
  std::function<Obj(const Mor&)> target;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;  // compose(g, f) = g after f
  std::function<std::vector<Mor>(const Obj&, const Obj&)> hom;  // enumerator, may be null
  std::function<bool(const Mor&)> mor_injective;                // may be null
};

/// A monad bundled with its base category view. `apply_obj`/`apply_mor`
/// materialize T on objects and morphism tables, so callers must keep the
/// objects they feed in small enough to enumerate.
template <class Obj, class Mor>
struct Monad {
  std::string name;
  CategoryOps<Obj, Mor> base;
  std::function<Obj(const Obj&)> apply_obj;
  std::function<Mor(const Mor&)> apply_mor;
  std::function<Mor(const Obj&)> unit_at;  // e_X : X -> TX
  std::function<Mor(const Obj&)> mult_at;  // m_X : TTX -> TX
};

/// Checks functoriality, unit/multiplication naturality, the two unit laws
/// and associativity over the supplied objects and morphisms. Associativity
/// at X materializes T^3 X, so callers must pre-filter the object list.
template <class Obj, class Mor>
CheckReport check_monad_laws(const Monad<Obj, Mor>& t, const std::vector<Obj>& objects,
                             const std::vector<Mor>& morphisms) {
  CheckReport rep;
  const auto& c = t.base;
  for (const auto& x : objects) {
    const std::string nm = c.obj_name(x);
    Obj tx = t.apply_obj(x);
    Mor e_x = t.unit_at(x);
    Mor m_x = t.mult_at(x);
    rep.add("functor-identity", nm, c.mor_eq(t.apply_mor(c.identity(x)), c.identity(tx)));
    // m . e_T = 1
    rep.add("unit-left", nm, c.mor_eq(c.compose(m_x, t.unit_at(tx)), c.identity(tx)));
    // m . Te = 1
    rep.add("unit-right", nm, c.mor_eq(c.compose(m_x, t.apply_mor(e_x)), c.identity(tx)));
    // m . Tm = m . m_T
    rep.add("associativity", nm,
            c.mor_eq(c.compose(m_x, t.apply_mor(m_x)), c.compose(m_x, t.mult_at(tx))));
  }
  for (const auto& f : morphisms) {
    Obj x = c.source(f), y = c.target(f);
    const std::string nm = c.obj_name(x) + "->" + c.obj_name(y);
    Mor tf = t.apply_mor(f);
    rep.add("unit-naturality", nm, c.mor_eq(c.compose(tf, t.unit_at(x)), c.compose(t.unit_at(y), f)));
    rep.add("mult-naturality", nm,
            c.mor_eq(c.compose(tf, t.mult_at(x)), c.compose(t.mult_at(y), t.apply_mor(tf))));
    for (const auto& g : morphisms) {
      if (!c.obj_eq(c.source(g), y)) continue;
      rep.add("functor-composition", nm + "->" + c.obj_name(c.target(g)),
              c.mor_eq(t.apply_mor(c.compose(g, f)), c.compose(t.apply_mor(g), tf)));
    }
  }
  return rep;
}

/// A morphism X -/-> Y of the Kleisli category: a base morphism X -> TY.
template <class Obj, class Mor>
struct KleisliMor {
  Obj source;
  Obj target;
  Mor arrow;
};

template <class Obj, class Mor>
KleisliMor<Obj, Mor> kleisli_identity(const Monad<Obj, Mor>& t, const Obj& x) {
  return KleisliMor<Obj, Mor>{x, x, t.unit_at(x)};
}

/// g . f through the multiplication: m_Z . Tg . f.
template <class Obj, class Mor>
KleisliMor<Obj, Mor> kleisli_compose(const Monad<Obj, Mor>& t, const KleisliMor<Obj, Mor>& f,
                                     const KleisliMor<Obj, Mor>& g) {
  if (!t.base.obj_eq(f.target, g.source)) throw MismatchError("kleisli composition middle object");
  Mor arrow = t.base.compose(t.mult_at(g.target), t.base.compose(t.apply_mor(g.arrow), f.arrow));
  return KleisliMor<Obj, Mor>{f.source, g.target, std::move(arrow)};
}

/// F_T on morphisms: f |-> e_Y . f.
template <class Obj, class Mor>
KleisliMor<Obj, Mor> kleisli_left_adjoint(const Monad<Obj, Mor>& t, const Mor& f) {
  Obj y = t.base.target(f);
  return KleisliMor<Obj, Mor>{t.base.source(f), y, t.base.compose(t.unit_at(y), f)};
}

/// G_T on morphisms: f |-> m_Y . Tf, a base morphism TX -> TY.
template <class Obj, class Mor>
Mor kleisli_right_adjoint(const Monad<Obj, Mor>& t, const KleisliMor<Obj, Mor>& f) {
  return t.base.compose(t.mult_at(f.target), t.apply_mor(f.arrow));
}

template <class Obj, class Mor>
bool kleisli_eq(const Monad<Obj, Mor>& t, const KleisliMor<Obj, Mor>& a,
                const KleisliMor<Obj, Mor>& b) {
  return t.base.obj_eq(a.source, b.source) && t.base.obj_eq(a.target, b.target) &&
         t.base.mor_eq(a.arrow, b.arrow);
}

/// The Kleisli category of a monad as a category view of its own.
template <class Obj, class Mor>
CategoryOps<Obj, KleisliMor<Obj, Mor>> kleisli_category(const Monad<Obj, Mor>& t) {
  CategoryOps<Obj, KleisliMor<Obj, Mor>> c;
  c.object_kind = t.base.object_kind + "/kleisli(" + t.name + ")";
  c.obj_eq = t.base.obj_eq;
  c.obj_name = t.base.obj_name;
  c.mor_eq = [t](const KleisliMor<Obj, Mor>& a, const KleisliMor<Obj, Mor>& b) {
    return kleisli_eq(t, a, b);
  };
  c.source = [](const KleisliMor<Obj, Mor>& f) { return f.source; };
  c.target = [](const KleisliMor<Obj, Mor>& f) { return f.target; };
  c.identity = [t](const Obj& x) { return kleisli_identity(t, x); };
  c.compose = [t](const KleisliMor<Obj, Mor>& g, const KleisliMor<Obj, Mor>& f) {
    return kleisli_compose(t, f, g);
  };
  if (t.base.hom) {
    c.hom = [t](const Obj& x, const Obj& y) {
      std::vector<KleisliMor<Obj, Mor>> out;
      for (auto& f : t.base.hom(x, t.apply_obj(y))) out.push_back(KleisliMor<Obj, Mor>{x, y, f});
      return out;
    };
  }
  return c;
}

/// A concrete adjunction F -| G between a base category and an ambient one,
/// with unit and counit components.
template <class ObjX, class MorX, class ObjA, class MorA>
struct Adjunction {
  std::string name;
  CategoryOps<ObjX, MorX> base;
  CategoryOps<ObjA, MorA> upper;
  std::function<ObjA(const ObjX&)> f_obj;
  std::function<MorA(const MorX&)> f_mor;
  std::function<ObjX(const ObjA&)> g_obj;
  std::function<MorX(const MorA&)> g_mor;
  std::function<MorX(const ObjX&)> unit_at;    // eta_X : X -> GFX
  std::function<MorA(const ObjA&)> counit_at;  // eps_A : FGA -> A
};

/// Verifies the two triangle identities on the supplied samples.
template <class ObjX, class MorX, class ObjA, class MorA>
CheckReport check_adjunction(const Adjunction<ObjX, MorX, ObjA, MorA>& adj,
                             const std::vector<ObjX>& base_objects,
                             const std::vector<ObjA>& upper_objects) {
  CheckReport rep;
  for (const auto& x : base_objects) {
    ObjA fx = adj.f_obj(x);
    bool ok = adj.upper.mor_eq(adj.upper.compose(adj.counit_at(fx), adj.f_mor(adj.unit_at(x))),
                               adj.upper.identity(fx));
    rep.add("triangle-F", adj.base.obj_name(x), ok);
  }
  for (const auto& a : upper_objects) {
    ObjX ga = adj.g_obj(a);
    bool ok = adj.base.mor_eq(adj.base.compose(adj.g_mor(adj.counit_at(a)), adj.unit_at(ga)),
                              adj.base.identity(ga));
    rep.add("triangle-G", adj.upper.obj_name(a), ok);
  }
  return rep;
}

/// An Eilenberg-Moore algebra: a carrier with a structure map TX -> X.
template <class Obj, class Mor>
struct EMAlgebra {
  Obj carrier;
  Mor structure;
};

template <class Obj, class Mor>
CheckReport check_em_algebra(const Monad<Obj, Mor>& t, const EMAlgebra<Obj, Mor>& a) {
  CheckReport rep;
  const auto& c = t.base;
  const std::string nm = c.obj_name(a.carrier);
  rep.add("em-unit", nm,
          c.mor_eq(c.compose(a.structure, t.unit_at(a.carrier)), c.identity(a.carrier)));
  rep.add("em-mult", nm,
          c.mor_eq(c.compose(a.structure, t.mult_at(a.carrier)),
                   c.compose(a.structure, t.apply_mor(a.structure))));
  return rep;
}

/// The comparison functor of a Kleisli adjunction into an ambient adjunction
/// inducing the same monad: C X = FX on objects and
/// C f = eps_{FY} . Ff on morphisms.
template <class Obj, class Mor, class ObjA, class MorA>
MorA comparison_c(const Adjunction<Obj, Mor, ObjA, MorA>& adj, const KleisliMor<Obj, Mor>& f) {
  return adj.upper.compose(adj.counit_at(adj.f_obj(f.target)), adj.f_mor(f.arrow));
}

/// A monad morphism presented by its per-object components.
template <class Obj, class Mor>
struct MonadMorphism {
  std::string name;
  Monad<Obj, Mor> source;
  Monad<Obj, Mor> target;
  std::function<Mor(const Obj&)> component;  // j_X : TX -> T'X
};

/// Checks the unit square j . e = e', the multiplication square
/// j . m = m' . j^2 with j^2 = j_{T'} . Tj, and naturality, over the given
/// samples. Optionally asserts componentwise injectivity (embeddings).
template <class Obj, class Mor>
CheckReport check_monad_morphism(const MonadMorphism<Obj, Mor>& j, const std::vector<Obj>& objects,
                                 const std::vector<Mor>& morphisms, bool require_injective) {
  CheckReport rep;
  const auto& c = j.source.base;
  for (const auto& x : objects) {
    const std::string nm = c.obj_name(x);
    Mor jx = j.component(x);
    rep.add("monadmor-unit", nm,
            c.mor_eq(c.compose(jx, j.source.unit_at(x)), j.target.unit_at(x)));
    // j^2 : TTX -> T'T'X
    Mor j_sq = c.compose(j.component(j.target.apply_obj(x)), j.source.apply_mor(jx));
    rep.add("monadmor-mult", nm,
            c.mor_eq(c.compose(jx, j.source.mult_at(x)),
                     c.compose(j.target.mult_at(x), j_sq)));
    if (require_injective && c.mor_injective)
      rep.add("monadmor-injective", nm, c.mor_injective(jx));
  }
  for (const auto& f : morphisms) {
    Obj x = c.source(f), y = c.target(f);
    rep.add("monadmor-naturality", c.obj_name(x) + "->" + c.obj_name(y),
            c.mor_eq(c.compose(j.component(y), j.source.apply_mor(f)),
                     c.compose(j.target.apply_mor(f), j.component(x))));
  }
  return rep;
}

/// Left-morphism data: a target monad concretised on the base category
/// together with the extracted component family x |-> (h |-> h-bar(x)).
/// Validation turns the extraction into a real MonadMorphism or throws
/// with the first failing square.
template <class Obj, class Mor>
struct LeftMorphismData {
  std::string name;
  Monad<Obj, Mor> source_monad;
  Monad<Obj, Mor> induced_monad;
  std::function<Mor(const Obj&)> component;
};

template <class Obj, class Mor>
MonadMorphism<Obj, Mor> induced_monad_morphism(const LeftMorphismData<Obj, Mor>& data,
                                               const std::vector<Obj>& objects,
                                               const std::vector<Mor>& morphisms) {
  MonadMorphism<Obj, Mor> j{data.name, data.source_monad, data.induced_monad, data.component};
  auto rep = check_monad_morphism(j, objects, morphisms, /*require_injective=*/true);
  for (const auto& item : rep.items)
    if (!item.ok) throw NotAMonadMorphism(item.law + " at " + item.object);
  return j;
}

}  // namespace findual
