#pragma once

#include <cassert>
#include <vector>

#include "findual/poset.hpp"

namespace findual {

/// A weakening-closed relation between finite posets: lowering the source
/// and raising the target preserves membership,
///     x <= x'  and  (x', y') in r  and  y' <= y   =>   (x, y) in r.
/// Equivalently every fiber r(x) is an up-set of the target and fibers
/// shrink as x grows. These are the spectral relations at finite scale,
/// i.e. the Kleisli morphisms of the lower Vietoris monad.
struct SpecRelation {
  PosetPtr source;
  PosetPtr target;
  std::vector<Mask> fibers;  // fibers[x] = {y | (x, y) in r}

  bool contains(int x, int y) const { return (fibers[static_cast<size_t>(x)] >> y) & 1; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < source->size(); ++x)
      for (int y = 0; y < target->size(); ++y)
        if (contains(x, y)) out.emplace_back(x, y);
    return out;
  }

  int pair_count() const {
    int c = 0;
    for (Mask f : fibers) c += popcount(f);
    return c;
  }

  bool operator==(const SpecRelation& o) const {
    return same_poset(source, o.source) && same_poset(target, o.target) && fibers == o.fibers;
  }
  bool operator!=(const SpecRelation& o) const { return !(*this == o); }
};

/// Validates weakening-closure of a raw fiber table; throws with the first
/// violating quadruple otherwise.
inline SpecRelation check_spec_relation(const PosetPtr& src, const PosetPtr& tgt,
                                        std::vector<Mask> fibers) {
  if (static_cast<int>(fibers.size()) != src->size()) throw Error("fiber table has wrong arity");
  for (int x = 0; x < src->size(); ++x)
    for (int xp = 0; xp < src->size(); ++xp) {
      if (!src->le(x, xp)) continue;
      for (int yp = 0; yp < tgt->size(); ++yp) {
        if (!((fibers[static_cast<size_t>(xp)] >> yp) & 1)) continue;
        for (int y = 0; y < tgt->size(); ++y)
          if (tgt->le(yp, y) && !((fibers[static_cast<size_t>(x)] >> y) & 1))
            throw NotWeakeningClosed(src->label(x), src->label(xp), tgt->label(yp), tgt->label(y));
      }
    }
  return SpecRelation{src, tgt, std::move(fibers)};
}

inline SpecRelation check_spec_relation(
    const PosetPtr& src, const PosetPtr& tgt,
    const std::vector<std::pair<std::string, std::string>>& raw_pairs) {
  std::vector<Mask> fibers(static_cast<size_t>(src->size()), 0);
  for (const auto& [a, b] : raw_pairs)
    fibers[static_cast<size_t>(src->index_of_checked(a))] |= Mask{1} << tgt->index_of_checked(b);
  return check_spec_relation(src, tgt, std::move(fibers));
}

inline SpecRelation empty_relation(const PosetPtr& src, const PosetPtr& tgt) {
  return SpecRelation{src, tgt, std::vector<Mask>(static_cast<size_t>(src->size()), 0)};
}

inline SpecRelation full_relation(const PosetPtr& src, const PosetPtr& tgt) {
  return SpecRelation{src, tgt, std::vector<Mask>(static_cast<size_t>(src->size()), tgt->full_mask())};
}

/// The lower graph f_* of a monotone map: x f_* y iff f(x) <= y.
/// This is the Kleisli unit direction; lower_graph(identity) is <= itself.
inline SpecRelation lower_graph(const MonotoneMap& f) {
  std::vector<Mask> fibers(static_cast<size_t>(f.source->size()), 0);
  for (int x = 0; x < f.source->size(); ++x)
    fibers[static_cast<size_t>(x)] = f.target->up_of(f.apply(x));
  return SpecRelation{f.source, f.target, std::move(fibers)};
}

/// Kleisli identity on X: the order relation itself.
inline SpecRelation identity_relation(const PosetPtr& p) { return lower_graph(identity_map(p)); }

/// The upper graph f^* : Y -/-> X of a monotone map: y f^* x iff y <= f(x).
/// Spectrality of f^* is guaranteed when f is open; with
/// `openness_required` the check is enforced up front. The result is always
/// validated for weakening-closure.
inline SpecRelation upper_graph(const MonotoneMap& f, bool openness_required = true) {
  if (openness_required) {
    for (Mask m : down_set_masks(*f.source))
      if (!f.target->is_down_set(f.image(m))) throw NotOpenMap(f.source->label_of_mask(m));
  }
  std::vector<Mask> fibers(static_cast<size_t>(f.target->size()), 0);
  for (int y = 0; y < f.target->size(); ++y)
    for (int x = 0; x < f.source->size(); ++x)
      if (f.target->le(y, f.apply(x))) fibers[static_cast<size_t>(y)] |= Mask{1} << x;
  return check_spec_relation(f.target, f.source, std::move(fibers));
}

/// Plain relational composition fiber table (the exists-formula).
inline std::vector<Mask> compose_fibers(const SpecRelation& r, const SpecRelation& s) {
  std::vector<Mask> out(static_cast<size_t>(r.source->size()), 0);
  for (int x = 0; x < r.source->size(); ++x) {
    Mask f = r.fibers[static_cast<size_t>(x)];
    for (int y = 0; y < r.target->size(); ++y)
      if ((f >> y) & 1) out[static_cast<size_t>(x)] |= s.fibers[static_cast<size_t>(y)];
  }
  return out;
}

/// The same composite computed as the Kleisli composite through the lower
/// Vietoris monad: m . V(s-hat) . r-hat, where V g takes up-closed images
/// and m is union. Used to cross-check compose_rel.
inline std::vector<Mask> compose_fibers_via_vietoris(const SpecRelation& r, const SpecRelation& s) {
  const std::vector<Mask> vz = up_set_masks(*s.target);
  std::vector<Mask> out(static_cast<size_t>(r.source->size()), 0);
  for (int x = 0; x < r.source->size(); ++x) {
    // r-hat(x) is an up-set A of Y; V(s-hat)(A) is the up-closure in VZ
    // (reverse inclusion) of {s-hat(y) | y in A}; its union is unchanged by
    // the closure, which only adds subsets of existing members.
    Mask a = r.fibers[static_cast<size_t>(x)];
    std::vector<Mask> family;
    for (int y = 0; y < r.target->size(); ++y)
      if ((a >> y) & 1) family.push_back(s.fibers[static_cast<size_t>(y)]);
    // Up-closure in VZ: every up-set of Z contained in a member joins the family.
    Mask u = 0;
    for (Mask c : vz) {
      for (Mask m : family)
        if (subset_of(c, m)) {
          u |= c;
          break;
        }
    }
    out[static_cast<size_t>(x)] = u;
  }
  return out;
}

/// Kleisli composition of spectral relations (diagrammatic order:
/// r : X -/-> Y, then s : Y -/-> Z). At finite scale the Kleisli composite
/// through V coincides with plain relational composition; both routes are
/// computed and compared when assertions are enabled.
inline SpecRelation compose_rel(const SpecRelation& r, const SpecRelation& s) {
  if (!same_poset(r.target, s.source)) throw SourceTargetMismatch("relation composition");
  std::vector<Mask> fibers = compose_fibers(r, s);
#ifndef NDEBUG
  assert(compose_fibers_via_vietoris(r, s) == fibers);
#endif
  auto out = check_spec_relation(r.source, s.target, std::move(fibers));
  return out;
}

/// All weakening-closed relations src -/-> tgt in canonical order
/// (enumerated by pair-set mask over the flattened pair grid).
inline std::vector<SpecRelation> all_spec_relations(const PosetPtr& src, const PosetPtr& tgt) {
  const int n = src->size(), m = tgt->size();
  if (n * m > 24) throw Error("relation enumeration space too large");
  std::vector<SpecRelation> out;
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<Mask> fibers(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      fibers[static_cast<size_t>(x)] = (bits >> (x * m)) & ((Mask{1} << m) - 1);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!tgt->is_up_set(fibers[static_cast<size_t>(x)])) ok = false;
      for (int xp = 0; xp < n && ok; ++xp)
        if (src->le(x, xp) && !subset_of(fibers[static_cast<size_t>(xp)], fibers[static_cast<size_t>(x)])) ok = false;
    }
    if (ok) out.push_back(SpecRelation{src, tgt, std::move(fibers)});
  }
  return out;
}

}  // namespace findual
