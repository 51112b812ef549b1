#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "findual/duality.hpp"
#include "findual/instances.hpp"
#include "findual/lattice.hpp"
#include "findual/relation.hpp"

namespace findual {

// ---------------------------------------------------------------------------
// Products in the relational category: the topological sum with the upper
// graphs of the injections as projections.
// ---------------------------------------------------------------------------

struct SpecRelProduct {
  PosetSum sum;
  SpecRelation proj1;  // X1+X2 -/-> X1
  SpecRelation proj2;  // X1+X2 -/-> X2
};

inline SpecRelProduct specrel_product(const PosetPtr& x1, const PosetPtr& x2) {
  auto sum = poset_sum(x1, x2);
  // Coproduct injections are open, so their upper graphs are spectral.
  auto p1 = upper_graph(sum.inj1, /*openness_required=*/true);
  auto p2 = upper_graph(sum.inj2, /*openness_required=*/true);
  return SpecRelProduct{std::move(sum), std::move(p1), std::move(p2)};
}

/// The canonical pairing into the sum: z <r,s> w iff w lies in the left
/// summand and z r w, or in the right summand and z s w.
inline SpecRelation pairing(const SpecRelation& r, const SpecRelation& s, const PosetSum& sum) {
  if (!same_poset(r.source, s.source)) throw MismatchError("pairing requires a shared source");
  const int n1 = r.target->size();
  std::vector<Mask> fibers(static_cast<size_t>(r.source->size()), 0);
  for (int z = 0; z < r.source->size(); ++z)
    fibers[static_cast<size_t>(z)] =
        r.fibers[static_cast<size_t>(z)] | (s.fibers[static_cast<size_t>(z)] << n1);
  return check_spec_relation(r.source, sum.sum, std::move(fibers));
}

inline SpecRelation pairing(const SpecRelation& r, const SpecRelation& s) {
  return pairing(r, s, poset_sum(r.target, s.target));
}

/// Copairing out of the sum, for the coproduct side of the coincidence.
inline SpecRelation copairing(const SpecRelation& r, const SpecRelation& s, const PosetSum& sum) {
  if (!same_poset(r.target, s.target)) throw MismatchError("copairing requires a shared target");
  std::vector<Mask> fibers;
  fibers.reserve(static_cast<size_t>(sum.sum->size()));
  for (Mask f : r.fibers) fibers.push_back(f);
  for (Mask f : s.fibers) fibers.push_back(f);
  return check_spec_relation(sum.sum, r.target, std::move(fibers));
}

// ---------------------------------------------------------------------------
// Tensor of relations: componentwise conjunction on the topological product.
// ---------------------------------------------------------------------------

/// r (x) s on the product posets. The fiber at (x, y) is r(x) x s(y), which
/// is also the image of (r-hat(x), s-hat(y)) under the product-of-closed-sets
/// map into V of the product; both computations are compared when
/// assertions are enabled.
inline SpecRelation tensor_rel(const SpecRelation& r, const SpecRelation& s,
                               const PosetProduct& src, const PosetProduct& tgt) {
  const int m2 = s.target->size();
  std::vector<Mask> fibers(static_cast<size_t>(src.product->size()), 0);
  for (int a = 0; a < src.product->size(); ++a) {
    auto [x, y] = src.coords[static_cast<size_t>(a)];
    Mask rf = r.fibers[static_cast<size_t>(x)];
    Mask sf = s.fibers[static_cast<size_t>(y)];
    Mask out = 0;
    for (int xp = 0; xp < r.target->size(); ++xp)
      if ((rf >> xp) & 1) {
        for (int yp = 0; yp < m2; ++yp)
          if ((sf >> yp) & 1) out |= Mask{1} << tgt.pair_index(xp, yp);
      }
    fibers[static_cast<size_t>(a)] = out;
  }
#ifndef NDEBUG
  // Independent route via the rectangle map on closed sets: each fiber must
  // be the rectangle spanned by the two fibers.
  for (int a = 0; a < src.product->size(); ++a) {
    auto [x, y] = src.coords[static_cast<size_t>(a)];
    for (int b = 0; b < tgt.product->size(); ++b) {
      auto [xp, yp] = tgt.coords[static_cast<size_t>(b)];
      bool in_rect = ((r.fibers[static_cast<size_t>(x)] >> xp) & 1) &&
                     ((s.fibers[static_cast<size_t>(y)] >> yp) & 1);
      assert(((fibers[static_cast<size_t>(a)] >> b) & 1) == static_cast<Mask>(in_rect));
    }
  }
#endif
  return check_spec_relation(src.product, tgt.product, std::move(fibers));
}

inline SpecRelation tensor_rel(const SpecRelation& r, const SpecRelation& s) {
  return tensor_rel(r, s, poset_product(r.source, s.source), poset_product(r.target, s.target));
}

// ---------------------------------------------------------------------------
// The two structure lemmas of the Vietoris construction.
// ---------------------------------------------------------------------------

struct VietorisSumIso {
  MonotoneMap forward;   // V(X1+X2) -> VX1 x VX2, C |-> (C n X1, C n X2)
  MonotoneMap backward;  // (A1, A2) |-> A1 + A2
};

inline VietorisSumIso vietoris_sum_iso(const PosetPtr& x1, const PosetPtr& x2) {
  auto sum = poset_sum(x1, x2);
  auto vsum = vietoris_level(sum.sum);
  auto v1 = vietoris_level(x1);
  auto v2 = vietoris_level(x2);
  auto prod = poset_product(v1.space, v2.space);
  const int n1 = x1->size();
  const Mask m1 = x1->full_mask();

  std::vector<int> fwd;
  fwd.reserve(vsum.members.size());
  for (Mask c : vsum.members)
    fwd.push_back(prod.pair_index(v1.index_of(c & m1), v2.index_of(c >> n1)));
  std::vector<int> bwd;
  bwd.reserve(prod.coords.size());
  for (auto [a1, a2] : prod.coords)
    bwd.push_back(vsum.index_of(v1.members[static_cast<size_t>(a1)] |
                                (v2.members[static_cast<size_t>(a2)] << n1)));
  return VietorisSumIso{make_monotone(vsum.space, prod.product, std::move(fwd)),
                        make_monotone(prod.product, vsum.space, std::move(bwd))};
}

/// Pointwise verification of the adjunction between the rectangle map and
/// the pairing of the projections on closed sets of a product.
inline CheckReport vietoris_prod_adjunction(const PosetPtr& x1, const PosetPtr& x2) {
  CheckReport rep;
  auto prod = poset_product(x1, x2);
  auto vprod = vietoris_level(prod.product);
  auto v1 = vietoris_level(x1);
  auto v2 = vietoris_level(x2);

  auto rectangle = [&](Mask a, Mask b) {
    Mask out = 0;
    for (int i = 0; i < x1->size(); ++i)
      if ((a >> i) & 1)
        for (int j = 0; j < x2->size(); ++j)
          if ((b >> j) & 1) out |= Mask{1} << prod.pair_index(i, j);
    return out;
  };
  auto can = [&](Mask w) {
    Mask pa = 0, pb = 0;
    for (int k = 0; k < prod.product->size(); ++k)
      if ((w >> k) & 1) {
        pa |= Mask{1} << prod.coords[static_cast<size_t>(k)].first;
        pb |= Mask{1} << prod.coords[static_cast<size_t>(k)].second;
      }
    return std::pair<Mask, Mask>{pa, pb};
  };

  // Pi is monotone for the reverse-inclusion orders, lands in closed sets,
  // and the unit inequality (A,B) <= can(Pi(A,B)) holds pointwise.
  bool unit_ok = true, pi_closed = true;
  for (Mask a : v1.members)
    for (Mask b : v2.members) {
      Mask rect = rectangle(a, b);
      if (!prod.product->is_up_set(rect)) pi_closed = false;
      auto [pa, pb] = can(rect);
      // (A,B) <= (pa,pb) componentwise in reverse inclusion.
      if (!(subset_of(pa, a) && subset_of(pb, b))) unit_ok = false;
    }
  rep.add("pi-lands-in-closed-sets", "", pi_closed);
  rep.add("unit-inequality", "", unit_ok);

  bool counit_ok = true, can_closed = true;
  for (Mask w : vprod.members) {
    auto [pa, pb] = can(w);
    if (!(x1->is_up_set(pa) && x2->is_up_set(pb))) can_closed = false;
    // W >= Pi(can W) in V of the product, i.e. W is inside the rectangle.
    if (!subset_of(w, rectangle(pa, pb))) counit_ok = false;
  }
  rep.add("can-lands-in-closed-sets", "", can_closed);
  rep.add("counit-inequality", "", counit_ok);

  // Galois equivalence: Pi(A,B) <= W iff (A,B) <= can(W).
  bool galois_ok = true;
  for (Mask a : v1.members)
    for (Mask b : v2.members) {
      Mask rect = rectangle(a, b);
      for (Mask w : vprod.members) {
        bool lhs = subset_of(w, rect);
        auto [pa, pb] = can(w);
        bool rhs = subset_of(pa, a) && subset_of(pb, b);
        if (lhs != rhs) galois_ok = false;
      }
    }
  rep.add("galois-equivalence", "", galois_ok);
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor products of lattices, representing bimorphisms.
// ---------------------------------------------------------------------------

/// A two-variable map preserving bottom and binary joins in each argument
/// separately. Such a map is automatically monotone.
struct Bimorphism {
  LatticePtr left, right, target;
  std::vector<int> table;  // flattened |left| x |right|

  int apply(int a, int b) const { return table[static_cast<size_t>(a * right->size() + b)]; }
};

inline Bimorphism check_bimorphism(const LatticePtr& l, const LatticePtr& r, const LatticePtr& tgt,
                                   std::vector<int> table) {
  if (static_cast<int>(table.size()) != l->size() * r->size())
    throw NotBimorphism("table has wrong arity");
  Bimorphism f{l, r, tgt, std::move(table)};
  for (int b = 0; b < r->size(); ++b) {
    if (f.apply(l->bottom(), b) != tgt->bottom()) throw NotBimorphism("left bottom not preserved");
    for (int a1 = 0; a1 < l->size(); ++a1)
      for (int a2 = 0; a2 < l->size(); ++a2)
        if (f.apply(l->join(a1, a2), b) != tgt->join(f.apply(a1, b), f.apply(a2, b)))
          throw NotBimorphism("left joins not preserved");
  }
  for (int a = 0; a < l->size(); ++a) {
    if (f.apply(a, r->bottom()) != tgt->bottom()) throw NotBimorphism("right bottom not preserved");
    for (int b1 = 0; b1 < r->size(); ++b1)
      for (int b2 = 0; b2 < r->size(); ++b2)
        if (f.apply(a, r->join(b1, b2)) != tgt->join(f.apply(a, b1), f.apply(a, b2)))
          throw NotBimorphism("right joins not preserved");
  }
  return f;
}

/// The tensor of two downset lattices: the downset lattice of the product
/// of the generating posets, with the rectangle bimorphism as the universal
/// arrow. Lattices without a remembered poset are canonicalized through
/// their join-irreducibles first.
struct TensorPackage {
  PosetPtr left_poset, right_poset;
  PosetProduct product;
  LatticePtr left, right;         // downset lattices of the generating posets
  LatticePtr tensor_lattice;      // downset lattice of the product
  Bimorphism universal;           // (A, B) |-> A x B
};

inline TensorPackage lattice_tensor(const LatticePtr& l_in, const LatticePtr& m_in) {
  LatticePtr l = l_in, m = m_in;
  if (!l->has_downset_form()) l = downset_lattice(join_irreducibles(*l).poset);
  if (!m->has_downset_form()) m = downset_lattice(join_irreducibles(*m).poset);
  TensorPackage t;
  t.left_poset = l->base_poset();
  t.right_poset = m->base_poset();
  t.product = poset_product(t.left_poset, t.right_poset);
  t.left = l;
  t.right = m;
  t.tensor_lattice = downset_lattice(t.product.product);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(l->size() * m->size()));
  for (int a = 0; a < l->size(); ++a)
    for (int b = 0; b < m->size(); ++b) {
      Mask rect = 0;
      for (int i = 0; i < t.left_poset->size(); ++i)
        if ((l->member_mask(a) >> i) & 1)
          for (int j = 0; j < t.right_poset->size(); ++j)
            if ((m->member_mask(b) >> j) & 1) rect |= Mask{1} << t.product.pair_index(i, j);
      table.push_back(t.tensor_lattice->index_of_mask(rect));
    }
  t.universal = check_bimorphism(l, m, t.tensor_lattice, std::move(table));
  return t;
}

/// Factors a bimorphism through the universal one:
/// g(W) = join of { f(A,B) | A x B inside W }, corestricted to the target.
/// The result is a hemimorphism with g . p = f.
inline LatticeMap factor_bimorphism(const Bimorphism& f, const TensorPackage& t) {
  if (!same_lattice(f.left, t.left) || !same_lattice(f.right, t.right))
    throw MismatchError("bimorphism endpoints do not match the tensor package");
  std::vector<int> table;
  table.reserve(static_cast<size_t>(t.tensor_lattice->size()));
  for (int w = 0; w < t.tensor_lattice->size(); ++w) {
    Mask wm = t.tensor_lattice->member_mask(w);
    int acc = f.target->bottom();
    for (int a = 0; a < t.left->size(); ++a)
      for (int b = 0; b < t.right->size(); ++b) {
        if (subset_of(t.tensor_lattice->member_mask(t.universal.apply(a, b)), wm))
          acc = f.target->join(acc, f.apply(a, b));
      }
    table.push_back(acc);
  }
  auto fbar = classify_map(t.tensor_lattice, f.target, std::move(table));
  if (!fbar.is_hemimorphism()) throw NotHemimorphism("factorization failed to preserve joins");
  for (int a = 0; a < t.left->size(); ++a)
    for (int b = 0; b < t.right->size(); ++b)
      if (fbar.apply(t.universal.apply(a, b)) != f.apply(a, b))
        throw Error("factorization does not restrict to the bimorphism");
  return fbar;
}

/// All bimorphisms JX x JY -> N, enumerated through their values on pairs
/// of principal opens and validated in full. Deterministic order.
inline std::vector<Bimorphism> enumerate_bimorphisms(const LatticePtr& l, const LatticePtr& r,
                                                     const LatticePtr& tgt) {
  if (!l->has_downset_form() || !r->has_downset_form())
    throw Error("bimorphism enumeration requires downset-form lattices");
  const PosetPtr x = l->base_poset();
  const PosetPtr y = r->base_poset();
  const int points = x->size() * y->size();
  double space = 1;
  for (int i = 0; i < points; ++i) space *= tgt->size();
  if (space > 5e6) throw Error("bimorphism enumeration space too large");

  std::vector<Bimorphism> out;
  std::vector<std::vector<int>> seen;
  std::vector<int> assign(static_cast<size_t>(points), 0);
  for (;;) {
    // Extend by joins over the points below each pair of down-sets.
    std::vector<int> table(static_cast<size_t>(l->size() * r->size()));
    for (int a = 0; a < l->size(); ++a)
      for (int b = 0; b < r->size(); ++b) {
        int acc = tgt->bottom();
        for (int i = 0; i < x->size(); ++i)
          if ((l->member_mask(a) >> i) & 1)
            for (int j = 0; j < y->size(); ++j)
              if ((r->member_mask(b) >> j) & 1)
                acc = tgt->join(acc, assign[static_cast<size_t>(i * y->size() + j)]);
        table[static_cast<size_t>(a * r->size() + b)] = acc;
      }
    try {
      auto f = check_bimorphism(l, r, tgt, std::move(table));
      if (std::find(seen.begin(), seen.end(), f.table) == seen.end()) {
        seen.push_back(f.table);
        out.push_back(std::move(f));
      }
    } catch (const NotBimorphism&) {
    }
    if (points == 0) break;
    int pos = points - 1;
    while (pos >= 0) {
      if (++assign[static_cast<size_t>(pos)] < tgt->size()) break;
      assign[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Bimorphism& a, const Bimorphism& b) { return a.table < b.table; });
  return out;
}

// ---------------------------------------------------------------------------
// Structural relations: diagonal and terminal.
// ---------------------------------------------------------------------------

inline SpecRelation diag_rel(const PosetPtr& x, const PosetProduct& xx) {
  std::vector<int> table;
  table.reserve(static_cast<size_t>(x->size()));
  for (int i = 0; i < x->size(); ++i) table.push_back(xx.pair_index(i, i));
  return lower_graph(make_monotone(x, xx.product, std::move(table)));
}

inline SpecRelation diag_rel(const PosetPtr& x) { return diag_rel(x, poset_product(x, x)); }

/// The lower graph of the unique map into the singleton: the full relation.
inline SpecRelation bang_rel(const PosetPtr& x, const PosetPtr& one) {
  if (one->size() != 1) throw Error("bang target must be a singleton");
  return lower_graph(MonotoneMap{x, one, std::vector<int>(static_cast<size_t>(x->size()), 0)});
}

inline SpecRelation bang_rel(const PosetPtr& x) { return bang_rel(x, singleton_poset()); }

// ---------------------------------------------------------------------------
// The relational-property / algebraic-property dictionary.
// ---------------------------------------------------------------------------

/// Precomputed data for the dictionary checks on relations X -/-> Y.
struct DictionaryContext {
  PosetPtr x, y;
  LatticePtr jx, jy;
  PosetProduct xx, yy;
  SpecRelation diag_x, diag_y;

  explicit DictionaryContext(PosetPtr x_, PosetPtr y_)
      : x(std::move(x_)),
        y(std::move(y_)),
        jx(downset_lattice(x)),
        jy(downset_lattice(y)),
        xx(poset_product(x, x)),
        yy(poset_product(y, y)),
        diag_x(diag_rel(x, xx)),
        diag_y(diag_rel(y, yy)) {}
};

struct TotalityReport {
  bool relational = false;  // every x has a successor
  bool composite = false;   // bang_* . r = bang_*
  bool algebraic = false;   // J r preserves the top element
  bool agree() const { return relational == composite && composite == algebraic; }
};

inline TotalityReport is_total(const SpecRelation& r, const DictionaryContext& ctx) {
  TotalityReport rep;
  rep.relational = true;
  for (Mask f : r.fibers)
    if (f == 0) rep.relational = false;

  auto one = singleton_poset();
  rep.composite = compose_fibers(r, bang_rel(ctx.y, one)) == bang_rel(ctx.x, one).fibers;

  auto jr = j_spec_table(r, *ctx.jy, *ctx.jx);
  rep.algebraic = jr[static_cast<size_t>(ctx.jy->top())] == ctx.jx->top();
  return rep;
}

inline TotalityReport is_total(const SpecRelation& r) {
  return is_total(r, DictionaryContext(r.source, r.target));
}

struct PartialMapReport {
  bool smallest_element = false;  // each nonempty fiber has a least element
  bool down_directed = false;     // each nonempty fiber is down-directed
  bool square = false;            // the diagonal square commutes
  bool algebraic = false;         // J r preserves binary meets
  bool agree() const {
    return smallest_element == down_directed && down_directed == square && square == algebraic;
  }
};

inline PartialMapReport is_partial_map(const SpecRelation& r, const DictionaryContext& ctx) {
  PartialMapReport rep;

  rep.smallest_element = true;
  for (Mask f : r.fibers) {
    if (f == 0) continue;
    bool has_least = false;
    for (int y = 0; y < ctx.y->size() && !has_least; ++y)
      if (((f >> y) & 1) && subset_of(f, ctx.y->up_of(y))) has_least = true;
    if (!has_least) rep.smallest_element = false;
  }

  rep.down_directed = true;
  for (Mask f : r.fibers) {
    if (f == 0) continue;
    for (int y1 = 0; y1 < ctx.y->size(); ++y1) {
      if (!((f >> y1) & 1)) continue;
      for (int y2 = 0; y2 < ctx.y->size(); ++y2) {
        if (!((f >> y2) & 1)) continue;
        bool bound = false;
        for (int z = 0; z < ctx.y->size() && !bound; ++z)
          if (((f >> z) & 1) && ctx.y->le(z, y1) && ctx.y->le(z, y2)) bound = true;
        if (!bound) rep.down_directed = false;
      }
    }
  }

  auto rr = tensor_rel(r, r, ctx.xx, ctx.yy);
  rep.square = compose_fibers(ctx.diag_x, rr) == compose_fibers(r, ctx.diag_y);

  auto jr = j_spec_table(r, *ctx.jy, *ctx.jx);
  rep.algebraic = true;
  for (int b1 = 0; b1 < ctx.jy->size() && rep.algebraic; ++b1)
    for (int b2 = b1; b2 < ctx.jy->size(); ++b2)
      if (jr[static_cast<size_t>(ctx.jy->meet(b1, b2))] !=
          ctx.jx->meet(jr[static_cast<size_t>(b1)], jr[static_cast<size_t>(b2)])) {
        rep.algebraic = false;
        break;
      }
  return rep;
}

inline PartialMapReport is_partial_map(const SpecRelation& r) {
  return is_partial_map(r, DictionaryContext(r.source, r.target));
}

struct JointSuccessorReport {
  bool relational = false;  // every x has a successor for r or s
  bool composite = false;   // bang_* . <r,s> = bang_*
  bool algebraic = false;   // J r (top) v J s (top) = top
  bool agree() const { return relational == composite && composite == algebraic; }
};

inline JointSuccessorReport joint_successor(const SpecRelation& r, const SpecRelation& s,
                                            const DictionaryContext& ctx) {
  if (!same_poset(r.source, s.source) || !same_poset(r.target, s.target))
    throw MismatchError("joint successor requires parallel relations");
  JointSuccessorReport rep;
  rep.relational = true;
  for (int x = 0; x < r.source->size(); ++x)
    if ((r.fibers[static_cast<size_t>(x)] | s.fibers[static_cast<size_t>(x)]) == 0)
      rep.relational = false;

  auto one = singleton_poset();
  auto sum = poset_sum(r.target, s.target);
  auto paired = pairing(r, s, sum);
  rep.composite = compose_fibers(paired, bang_rel(sum.sum, one)) == bang_rel(ctx.x, one).fibers;

  auto jr = j_spec_table(r, *ctx.jy, *ctx.jx);
  auto js = j_spec_table(s, *ctx.jy, *ctx.jx);
  rep.algebraic = ctx.jx->join(jr[static_cast<size_t>(ctx.jy->top())],
                               js[static_cast<size_t>(ctx.jy->top())]) == ctx.jx->top();
  return rep;
}

inline JointSuccessorReport joint_successor(const SpecRelation& r, const SpecRelation& s) {
  return joint_successor(r, s, DictionaryContext(r.source, r.target));
}

}  // namespace findual
