#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "findual/poset.hpp"

namespace findual {

/// Preservation flags recorded on lattice maps. A hemimorphism preserves
/// bottom and binary joins; a full homomorphism preserves all four.
enum MapFlags : std::uint8_t {
  kPreservesBottom = 1,
  kPreservesJoins = 2,
  kPreservesTop = 4,
  kPreservesMeets = 8,
  kHemimorphism = kPreservesBottom | kPreservesJoins,
  kMeetHemimorphism = kPreservesTop | kPreservesMeets,
  kFullHomomorphism = kPreservesBottom | kPreservesJoins | kPreservesTop | kPreservesMeets,
};

/// A finite distributive lattice stored extensionally: carrier order plus
/// cached join/meet tables and the two extremes. Non-distributive input is
/// rejected on construction. A lattice built from down-sets of a generating
/// poset keeps that poset (and the member masks) around; the dualities use
/// this presentation directly and canonicalize other lattices through their
/// join-irreducibles.
class DistLattice {
 public:
  int size() const { return carrier_.size(); }
  const FinPoset& carrier() const { return carrier_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a * size() + b)]; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a * size() + b)]; }
  bool le(int a, int b) const { return carrier_.le(a, b); }
  const std::string& label(int i) const { return carrier_.label(i); }
  int index_of_checked(const std::string& l) const {
    auto i = carrier_.index_of(l);
    if (!i) throw UnknownElement(l);
    return *i;
  }

  bool has_downset_form() const { return base_ != nullptr; }
  const PosetPtr& base_poset() const { return base_; }
  /// Down-set of the generating poset represented by element i.
  Mask member_mask(int i) const { return members_[static_cast<size_t>(i)]; }
  int index_of_mask(Mask m) const {
    auto it = mask_index_.find(m);
    if (it == mask_index_.end()) throw Error("mask is not a member of the lattice");
    return it->second;
  }

  bool operator==(const DistLattice& o) const { return carrier_ == o.carrier_; }
  bool operator!=(const DistLattice& o) const { return !(*this == o); }

  /// Validates that the order is a distributive lattice with extremes and
  /// caches the tables. Throws NotALattice / NotDistributive.
  static DistLattice from_order(FinPoset carrier) {
    const int n = carrier.size();
    if (n == 0) throw NotALattice("", "", "carrier (empty)");
    DistLattice l;
    l.carrier_ = std::move(carrier);
    l.join_.assign(static_cast<size_t>(n) * n, -1);
    l.meet_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lub = -1, glb = -1;
        for (int c = 0; c < n; ++c) {
          if (l.carrier_.le(a, c) && l.carrier_.le(b, c) && (lub < 0 || l.carrier_.le(c, lub))) lub = c;
          if (l.carrier_.le(c, a) && l.carrier_.le(c, b) && (glb < 0 || l.carrier_.le(glb, c))) glb = c;
        }
        // Candidate found greedily; confirm it really bounds every competitor.
        if (lub >= 0)
          for (int c = 0; c < n; ++c)
            if (l.carrier_.le(a, c) && l.carrier_.le(b, c) && !l.carrier_.le(lub, c)) lub = -1;
        if (glb >= 0)
          for (int c = 0; c < n; ++c)
            if (l.carrier_.le(c, a) && l.carrier_.le(c, b) && !l.carrier_.le(c, glb)) glb = -1;
        if (lub < 0) throw NotALattice(l.carrier_.label(a), l.carrier_.label(b), "least upper bound");
        if (glb < 0) throw NotALattice(l.carrier_.label(a), l.carrier_.label(b), "greatest lower bound");
        l.join_[static_cast<size_t>(a * n + b)] = lub;
        l.meet_[static_cast<size_t>(a * n + b)] = glb;
      }
    l.bottom_ = 0;
    l.top_ = 0;
    for (int i = 0; i < n; ++i) {
      if (l.carrier_.le(i, l.bottom_)) l.bottom_ = i;
      if (l.carrier_.le(l.top_, i)) l.top_ = i;
    }
    for (int i = 0; i < n; ++i)
      if (!l.carrier_.le(l.bottom_, i) || !l.carrier_.le(i, l.top_))
        throw NotALattice(l.carrier_.label(i), "", "global extreme");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
            throw NotDistributive(l.carrier_.label(x), l.carrier_.label(y), l.carrier_.label(z));
    return l;
  }

  /// Down-set lattice of a poset: the object part JX of the duality.
  /// Join is union and meet intersection, so the axioms hold by construction.
  static DistLattice downsets_of(PosetPtr base) {
    DistLattice l;
    l.base_ = std::move(base);
    l.members_ = down_set_masks(*l.base_);
    const int n = static_cast<int>(l.members_.size());
    std::vector<std::string> labels;
    std::vector<Mask> up(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      labels.push_back(l.base_->label_of_mask(l.members_[static_cast<size_t>(i)]));
      l.mask_index_[l.members_[static_cast<size_t>(i)]] = i;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (subset_of(l.members_[static_cast<size_t>(i)], l.members_[static_cast<size_t>(j)]))
          up[static_cast<size_t>(i)] |= Mask{1} << j;
    l.carrier_ = FinPoset::from_closed_table(std::move(labels), std::move(up));
    l.join_.assign(static_cast<size_t>(n) * n, 0);
    l.meet_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        l.join_[static_cast<size_t>(i * n + j)] =
            l.mask_index_.at(l.members_[static_cast<size_t>(i)] | l.members_[static_cast<size_t>(j)]);
        l.meet_[static_cast<size_t>(i * n + j)] =
            l.mask_index_.at(l.members_[static_cast<size_t>(i)] & l.members_[static_cast<size_t>(j)]);
      }
    l.bottom_ = l.mask_index_.at(0);
    l.top_ = l.mask_index_.at(l.base_->full_mask());
    return l;
  }

 private:
  FinPoset carrier_;
  std::vector<int> join_, meet_;
  int bottom_ = 0, top_ = 0;
  PosetPtr base_;
  std::vector<Mask> members_;
  std::map<Mask, int> mask_index_;
};

using LatticePtr = std::shared_ptr<const DistLattice>;

inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline LatticePtr downset_lattice(const PosetPtr& p) {
  return std::make_shared<DistLattice>(DistLattice::downsets_of(p));
}

inline LatticePtr lattice_from_order(FinPoset carrier) {
  return std::make_shared<DistLattice>(DistLattice::from_order(std::move(carrier)));
}

/// The two-element lattice 2 = J(1).
inline LatticePtr two_element_lattice() { return downset_lattice(singleton_poset()); }

struct JoinIrreducibles {
  PosetPtr poset;                  // induced sub-order on the irreducibles
  std::vector<int> carrier_index;  // position in the ambient lattice carrier
};

/// Elements x != bottom with x = a v b implying x in {a, b}.
inline JoinIrreducibles join_irreducibles(const DistLattice& l) {
  std::vector<int> irr;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    bool ok = true;
    for (int a = 0; a < l.size() && ok; ++a)
      for (int b = 0; b < l.size() && ok; ++b)
        if (l.join(a, b) == x && a != x && b != x) ok = false;
    if (ok) irr.push_back(x);
  }
  std::vector<std::string> labels;
  for (int x : irr) labels.push_back(l.label(x));
  const int k = static_cast<int>(irr.size());
  std::vector<Mask> up(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (l.le(irr[static_cast<size_t>(i)], irr[static_cast<size_t>(j)])) up[static_cast<size_t>(i)] |= Mask{1} << j;
  return JoinIrreducibles{make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up))),
                          std::move(irr)};
}

/// Dual notion, needed to parametrize meet-preserving map enumeration.
inline JoinIrreducibles meet_irreducibles(const DistLattice& l) {
  std::vector<int> irr;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    bool ok = true;
    for (int a = 0; a < l.size() && ok; ++a)
      for (int b = 0; b < l.size() && ok; ++b)
        if (l.meet(a, b) == x && a != x && b != x) ok = false;
    if (ok) irr.push_back(x);
  }
  std::vector<std::string> labels;
  for (int x : irr) labels.push_back(l.label(x));
  const int k = static_cast<int>(irr.size());
  std::vector<Mask> up(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (l.le(irr[static_cast<size_t>(i)], irr[static_cast<size_t>(j)])) up[static_cast<size_t>(i)] |= Mask{1} << j;
  return JoinIrreducibles{make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up))),
                          std::move(irr)};
}

/// A lattice map with its verified preservation class. Construct through
/// classify_map so the flags always reflect the table.
struct LatticeMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<int> table;
  std::uint8_t flags = 0;

  int apply(int i) const { return table[static_cast<size_t>(i)]; }
  bool has(std::uint8_t f) const { return (flags & f) == f; }
  bool is_hemimorphism() const { return has(kHemimorphism); }

  bool operator==(const LatticeMap& o) const {
    return same_lattice(source, o.source) && same_lattice(target, o.target) && table == o.table;
  }
  bool operator!=(const LatticeMap& o) const { return !(*this == o); }
};

/// Computes exactly the preservation flags that hold of the table.
inline LatticeMap classify_map(const LatticePtr& src, const LatticePtr& tgt, std::vector<int> table) {
  if (static_cast<int>(table.size()) != src->size()) throw Error("lattice map table has wrong arity");
  for (int v : table)
    if (v < 0 || v >= tgt->size()) throw UnknownElement(std::to_string(v));
  std::uint8_t flags = 0;
  if (table[static_cast<size_t>(src->bottom())] == tgt->bottom()) flags |= kPreservesBottom;
  if (table[static_cast<size_t>(src->top())] == tgt->top()) flags |= kPreservesTop;
  bool joins = true, meets = true;
  for (int a = 0; a < src->size() && (joins || meets); ++a)
    for (int b = a; b < src->size() && (joins || meets); ++b) {
      if (table[static_cast<size_t>(src->join(a, b))] !=
          tgt->join(table[static_cast<size_t>(a)], table[static_cast<size_t>(b)]))
        joins = false;
      if (table[static_cast<size_t>(src->meet(a, b))] !=
          tgt->meet(table[static_cast<size_t>(a)], table[static_cast<size_t>(b)]))
        meets = false;
    }
  if (joins) flags |= kPreservesJoins;
  if (meets) flags |= kPreservesMeets;
  return LatticeMap{src, tgt, std::move(table), flags};
}

inline LatticeMap classify_map(const LatticePtr& src, const LatticePtr& tgt,
                               const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<int> table(static_cast<size_t>(src->size()), -1);
  for (const auto& [k, v] : raw) table[static_cast<size_t>(src->index_of_checked(k))] = tgt->index_of_checked(v);
  for (int v : table)
    if (v < 0) throw Error("lattice map table is not total");
  return classify_map(src, tgt, std::move(table));
}

inline LatticeMap identity_lattice_map(const LatticePtr& l) {
  std::vector<int> t(static_cast<size_t>(l->size()));
  std::iota(t.begin(), t.end(), 0);
  return classify_map(l, l, std::move(t));
}

inline LatticeMap compose_lattice_maps(const LatticeMap& g, const LatticeMap& f) {
  if (!same_lattice(f.target, g.source)) throw SourceTargetMismatch("lattice map composition");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[static_cast<size_t>(f.table[i])];
  return classify_map(f.source, g.target, std::move(t));
}

/// Complement witness for a Boolean lattice.
struct BoolWitness {
  LatticePtr lattice;
  std::vector<int> complement;
};

/// A finite distributive lattice is Boolean iff every element has a
/// complement (equivalently, its join-irreducibles form an antichain).
inline std::optional<BoolWitness> is_boolean(const LatticePtr& l) {
  std::vector<int> comp(static_cast<size_t>(l->size()), -1);
  for (int x = 0; x < l->size(); ++x) {
    for (int y = 0; y < l->size(); ++y)
      if (l->join(x, y) == l->top() && l->meet(x, y) == l->bottom()) {
        comp[static_cast<size_t>(x)] = y;
        break;
      }
    if (comp[static_cast<size_t>(x)] < 0) return std::nullopt;
  }
  return BoolWitness{l, std::move(comp)};
}

/// Join/meet-preserving bijection search. Candidate maps come from order
/// isomorphisms of the join-irreducible posets; the winning table is
/// verified against both operation tables before being returned.
inline std::optional<std::vector<int>> lattice_iso(const DistLattice& l, const DistLattice& m) {
  if (l.size() != m.size()) return std::nullopt;
  auto jl = join_irreducibles(l);
  auto jm = join_irreducibles(m);
  auto pi = poset_iso(*jl.poset, *jm.poset);
  if (!pi) return std::nullopt;
  const int k = jl.poset->size();
  std::vector<int> table(static_cast<size_t>(l.size()), -1);
  for (int x = 0; x < l.size(); ++x) {
    int acc = m.bottom();
    for (int i = 0; i < k; ++i)
      if (l.le(jl.carrier_index[static_cast<size_t>(i)], x))
        acc = m.join(acc, jm.carrier_index[static_cast<size_t>((*pi)[static_cast<size_t>(i)])]);
    table[static_cast<size_t>(x)] = acc;
  }
  std::vector<bool> hit(static_cast<size_t>(m.size()), false);
  for (int v : table) {
    if (hit[static_cast<size_t>(v)]) return std::nullopt;
    hit[static_cast<size_t>(v)] = true;
  }
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (table[static_cast<size_t>(l.join(a, b))] !=
          m.join(table[static_cast<size_t>(a)], table[static_cast<size_t>(b)]))
        return std::nullopt;
      if (table[static_cast<size_t>(l.meet(a, b))] !=
          m.meet(table[static_cast<size_t>(a)], table[static_cast<size_t>(b)]))
        return std::nullopt;
    }
  return table;
}

/// Brute-force enumeration of all maps src -> tgt whose class contains
/// `required_flags`, in lexicographic table order. Guarded; intended for
/// oracle duty at small sizes.
inline std::vector<LatticeMap> all_lattice_maps_brute(const LatticePtr& src, const LatticePtr& tgt,
                                                      std::uint8_t required_flags) {
  const int n = src->size(), m = tgt->size();
  double space = 1;
  for (int i = 0; i < n; ++i) space *= m;
  if (space > 2e7) throw Error("lattice map table space too large for brute force");
  std::vector<LatticeMap> out;
  std::vector<int> t(static_cast<size_t>(n), 0);
  for (;;) {
    auto lm = classify_map(src, tgt, t);
    if (lm.has(required_flags)) out.push_back(std::move(lm));
    int pos = n - 1;
    while (pos >= 0) {
      if (++t[static_cast<size_t>(pos)] < m) break;
      t[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

namespace detail {

/// Extends an assignment on the join-irreducibles to the whole carrier by
/// joins. A join- and bottom-preserving map is determined this way; the
/// final classify pass rejects spurious candidates, so the enumeration is
/// sound, and completeness for distributive sources is covered by tests
/// against the brute-force route.
inline std::vector<LatticeMap> maps_via_irreducibles(const LatticePtr& src, const LatticePtr& tgt,
                                                     const JoinIrreducibles& ji,
                                                     std::uint8_t required_flags) {
  const int k = ji.poset->size();
  std::vector<LatticeMap> out;
  std::vector<int> assign(static_cast<size_t>(k), 0);
  auto emit = [&]() {
    std::vector<int> table(static_cast<size_t>(src->size()));
    for (int x = 0; x < src->size(); ++x) {
      int acc = tgt->bottom();
      for (int i = 0; i < k; ++i)
        if (src->le(ji.carrier_index[static_cast<size_t>(i)], x))
          acc = tgt->join(acc, assign[static_cast<size_t>(i)]);
      table[static_cast<size_t>(x)] = acc;
    }
    auto lm = classify_map(src, tgt, std::move(table));
    if (lm.has(required_flags)) out.push_back(std::move(lm));
  };
  if (k == 0) {
    emit();
    return out;
  }
  // Monotone assignments only; anything else cannot extend to a monotone map.
  int pos = 0;
  for (;;) {
    if (pos == k) {
      emit();
      --pos;
      ++assign[static_cast<size_t>(pos)];
    }
    if (assign[static_cast<size_t>(pos)] >= tgt->size()) {
      assign[static_cast<size_t>(pos)] = 0;
      --pos;
      if (pos < 0) break;
      ++assign[static_cast<size_t>(pos)];
      continue;
    }
    bool ok = true;
    for (int j = 0; j < pos && ok; ++j) {
      if (ji.poset->le(j, pos) &&
          !tgt->le(assign[static_cast<size_t>(j)], assign[static_cast<size_t>(pos)]))
        ok = false;
      if (ji.poset->le(pos, j) &&
          !tgt->le(assign[static_cast<size_t>(pos)], assign[static_cast<size_t>(j)]))
        ok = false;
    }
    if (ok)
      ++pos;
    else
      ++assign[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace detail

/// All maps preserving bottom and binary joins (and whatever else
/// `required_flags` adds), enumerated through the join-irreducible
/// parametrization. Deterministic order.
inline std::vector<LatticeMap> enumerate_hemimorphisms(const LatticePtr& src, const LatticePtr& tgt,
                                                       std::uint8_t required_flags = kHemimorphism) {
  auto ji = join_irreducibles(*src);
  auto out = detail::maps_via_irreducibles(src, tgt, ji, required_flags);
  std::sort(out.begin(), out.end(),
            [](const LatticeMap& a, const LatticeMap& b) { return a.table < b.table; });
  return out;
}

/// All maps preserving top and binary meets, via the meet-irreducible dual
/// parametrization.
inline std::vector<LatticeMap> enumerate_meet_hemimorphisms(const LatticePtr& src, const LatticePtr& tgt) {
  auto mi = meet_irreducibles(*src);
  const int k = mi.poset->size();
  std::vector<LatticeMap> out;
  std::vector<int> assign(static_cast<size_t>(k), 0);
  auto emit = [&]() {
    std::vector<int> table(static_cast<size_t>(src->size()));
    for (int x = 0; x < src->size(); ++x) {
      int acc = tgt->top();
      for (int i = 0; i < k; ++i)
        if (src->le(x, mi.carrier_index[static_cast<size_t>(i)]))
          acc = tgt->meet(acc, assign[static_cast<size_t>(i)]);
      table[static_cast<size_t>(x)] = acc;
    }
    auto lm = classify_map(src, tgt, std::move(table));
    if (lm.has(kMeetHemimorphism)) out.push_back(std::move(lm));
  };
  if (k == 0) {
    emit();
  } else {
    int pos = 0;
    for (;;) {
      if (pos == k) {
        emit();
        --pos;
        ++assign[static_cast<size_t>(pos)];
      }
      if (assign[static_cast<size_t>(pos)] >= tgt->size()) {
        assign[static_cast<size_t>(pos)] = 0;
        --pos;
        if (pos < 0) break;
        ++assign[static_cast<size_t>(pos)];
        continue;
      }
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (mi.poset->le(j, pos) &&
            !tgt->le(assign[static_cast<size_t>(j)], assign[static_cast<size_t>(pos)]))
          ok = false;
        if (mi.poset->le(pos, j) &&
            !tgt->le(assign[static_cast<size_t>(pos)], assign[static_cast<size_t>(j)]))
          ok = false;
      }
      if (ok)
        ++pos;
      else
        ++assign[static_cast<size_t>(pos)];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeMap& a, const LatticeMap& b) { return a.table < b.table; });
  return out;
}

/// All {bottom, top, join, meet}-preserving maps.
inline std::vector<LatticeMap> enumerate_full_homs(const LatticePtr& src, const LatticePtr& tgt) {
  return enumerate_hemimorphisms(src, tgt, kFullHomomorphism);
}

}  // namespace findual
