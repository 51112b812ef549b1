#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "findual/finset.hpp"
#include "findual/monad.hpp"
#include "findual/poset.hpp"

namespace findual {

// ---------------------------------------------------------------------------
// Powerset monad on finite sets.
// ---------------------------------------------------------------------------

/// One application of P to a set: the member masks in canonical order plus
/// the materialized object. Index lookups go through the sorted mask list.
struct PowersetLevel {
  SetObj base;
  SetObj space;
  std::vector<Mask> members;

  int index_of(Mask m) const {
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
      if (members[static_cast<size_t>(i)] == m) return i;
    throw Error("mask not found in powerset level");
  }
};

inline PowersetLevel powerset_level(const SetObj& x, const std::string& label_prefix = "") {
  if (x->size() > 16) throw Error("powerset object too large to materialize");
  PowersetLevel lvl;
  lvl.base = x;
  lvl.members = submasks_canonical(x->full_mask());
  std::vector<std::string> labels;
  for (Mask m : lvl.members) labels.push_back(label_prefix + x->label_of_mask(m));
  lvl.space = make_finset(std::move(labels));
  return lvl;
}

inline Monad<SetObj, SetMor> powerset_monad() {
  Monad<SetObj, SetMor> t;
  t.name = "powerset";
  t.base = finset_category();
  t.apply_obj = [](const SetObj& x) { return powerset_level(x).space; };
  t.apply_mor = [](const SetMor& f) {
    auto src = powerset_level(f.source);
    auto tgt = powerset_level(f.target);
    std::vector<int> table;
    table.reserve(src.members.size());
    for (Mask m : src.members) table.push_back(tgt.index_of(f.image(m)));
    return SetMor{src.space, tgt.space, std::move(table)};
  };
  t.unit_at = [](const SetObj& x) {
    auto lvl = powerset_level(x);
    std::vector<int> table;
    for (int i = 0; i < x->size(); ++i) table.push_back(lvl.index_of(Mask{1} << i));
    return SetMor{x, lvl.space, std::move(table)};
  };
  t.mult_at = [](const SetObj& x) {
    auto lvl = powerset_level(x);
    auto lvl2 = powerset_level(lvl.space);
    std::vector<int> table;
    table.reserve(lvl2.members.size());
    for (Mask family : lvl2.members) {
      Mask u = 0;
      for (int i = 0; i < lvl.space->size(); ++i)
        if ((family >> i) & 1) u |= lvl.members[static_cast<size_t>(i)];
      table.push_back(lvl.index_of(u));
    }
    return SetMor{lvl2.space, lvl.space, std::move(table)};
  };
  return t;
}

// ---------------------------------------------------------------------------
// Filter monad on finite sets, in the principal encoding: every filter on a
// finite set is the up-set of its core, so FX is carried by the subsets of
// X; the improper filter (core = empty set) is included. Under the encoding
// the functor action is direct image on cores, the unit takes singleton
// cores and the multiplication unions the cores of the outer core.
// ---------------------------------------------------------------------------

inline Monad<SetObj, SetMor> filter_monad() {
  Monad<SetObj, SetMor> t = powerset_monad();
  t.name = "filter";
  auto relabel = [](const SetObj& base, const SetObj& space) {
    std::vector<std::string> labels;
    for (const auto& l : space->labels) labels.push_back("↑" + l);
    (void)base;
    return make_finset(std::move(labels));
  };
  auto pw = powerset_monad();
  t.apply_obj = [pw, relabel](const SetObj& x) { return relabel(x, pw.apply_obj(x)); };
  t.apply_mor = [pw, relabel](const SetMor& f) {
    SetMor g = pw.apply_mor(f);
    return SetMor{relabel(f.source, g.source), relabel(f.target, g.target), g.table};
  };
  t.unit_at = [pw, relabel](const SetObj& x) {
    SetMor g = pw.unit_at(x);
    return SetMor{x, relabel(x, g.target), g.table};
  };
  t.mult_at = [pw, relabel](const SetObj& x) {
    SetMor g = pw.mult_at(x);
    // Outer level labels gain a second arrow through the relabelled carrier.
    auto fx = relabel(x, pw.apply_obj(x));
    auto ffx = relabel(fx, powerset_level(fx).space);
    return SetMor{ffx, fx, g.table};
  };
  return t;
}

/// Multiplication of the filter monad evaluated on an encoded
/// filter-of-filters: `outer_core` is a mask over the canonical elements of
/// FX naming the core of the outer filter. Computed through the principal
/// encoding and cross-checked against the literal A-sharp definition:
/// m(F)(A) holds iff A# = {f in FX | A in f} belongs to F.
inline Mask filter_mult(const SetObj& x, Mask outer_core) {
  auto fx = powerset_level(x);
  if (outer_core >> fx.members.size()) throw EncodingError("outer core mask out of range");

  Mask via_encoding = 0;
  for (int i = 0; i < static_cast<int>(fx.members.size()); ++i)
    if ((outer_core >> i) & 1) via_encoding |= fx.members[static_cast<size_t>(i)];

  // Literal route: collect every A with A# in the outer filter and make sure
  // the result is the principal filter of the encoded answer.
  std::vector<Mask> collected;
  for (Mask a : fx.members) {
    Mask a_sharp = 0;  // mask over FX: filters containing A, i.e. cores below A
    for (int i = 0; i < static_cast<int>(fx.members.size()); ++i)
      if (subset_of(fx.members[static_cast<size_t>(i)], a)) a_sharp |= Mask{1} << i;
    bool member = subset_of(outer_core, a_sharp);  // A# belongs to the up-set of the core
    if (member) collected.push_back(a);
  }
  Mask least = x->full_mask();
  for (Mask a : collected) least &= a;
  size_t expect = 0;
  for (Mask a : fx.members)
    if (subset_of(least, a)) ++expect;
  if (collected.size() != expect || least != via_encoding)
    throw EncodingError("multiplication result is not the expected principal filter");
  return via_encoding;
}

// ---------------------------------------------------------------------------
// Lower Vietoris monad on finite posets. Closed sets are up-sets; VX is the
// set of up-sets ordered by reverse inclusion, Vf takes up-closed images,
// the unit is the point closure ↑x and multiplication is union.
// ---------------------------------------------------------------------------

struct VietorisLevel {
  PosetPtr base;
  PosetPtr space;
  std::vector<Mask> members;  // up-sets of base, canonical order

  int index_of(Mask m) const {
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
      if (members[static_cast<size_t>(i)] == m) return i;
    throw Error("mask is not an up-set of the base poset");
  }
};

inline VietorisLevel vietoris_level(const PosetPtr& x) {
  if (x->size() > 16) throw Error("vietoris object too large to materialize");
  VietorisLevel lvl;
  lvl.base = x;
  lvl.members = up_set_masks(*x);
  const int n = static_cast<int>(lvl.members.size());
  if (n > kMaxElements) throw Error("vietoris object exceeds the carrier cap");
  std::vector<std::string> labels;
  for (Mask m : lvl.members) labels.push_back(x->label_of_mask(m));
  std::vector<Mask> up(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (subset_of(lvl.members[static_cast<size_t>(j)], lvl.members[static_cast<size_t>(i)]))
        up[static_cast<size_t>(i)] |= Mask{1} << j;  // A <= B iff B is a subset of A
  lvl.space = make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up)));
  return lvl;
}

/// VX: up-sets of X under reverse inclusion.
inline PosetPtr vietoris_object(const PosetPtr& x) { return vietoris_level(x).space; }

/// Vf sends an up-set to the up-closure of its image.
inline MonotoneMap vietoris_map(const MonotoneMap& f) {
  auto src = vietoris_level(f.source);
  auto tgt = vietoris_level(f.target);
  std::vector<int> table;
  table.reserve(src.members.size());
  for (Mask m : src.members) table.push_back(tgt.index_of(f.target->up_closure(f.image(m))));
  return make_monotone(src.space, tgt.space, std::move(table));
}

inline MonotoneMap vietoris_unit(const PosetPtr& x) {
  auto lvl = vietoris_level(x);
  std::vector<int> table;
  for (int i = 0; i < x->size(); ++i) table.push_back(lvl.index_of(x->up_of(i)));
  return make_monotone(x, lvl.space, std::move(table));
}

inline MonotoneMap vietoris_mult(const PosetPtr& x) {
  auto lvl = vietoris_level(x);
  auto lvl2 = vietoris_level(lvl.space);
  std::vector<int> table;
  table.reserve(lvl2.members.size());
  for (Mask family : lvl2.members) {
    Mask u = 0;
    for (int i = 0; i < lvl.space->size(); ++i)
      if ((family >> i) & 1) u |= lvl.members[static_cast<size_t>(i)];
    table.push_back(lvl.index_of(u));
  }
  return make_monotone(lvl2.space, lvl.space, std::move(table));
}

inline Monad<PosetPtr, MonotoneMap> vietoris_monad() {
  Monad<PosetPtr, MonotoneMap> t;
  t.name = "vietoris";
  t.base = poset_category();
  t.apply_obj = vietoris_object;
  t.apply_mor = vietoris_map;
  t.unit_at = vietoris_unit;
  t.mult_at = vietoris_mult;
  return t;
}

// ---------------------------------------------------------------------------
// The monad transferred to finite Stone spaces, i.e. discrete posets: the
// carrier is the full powerset with the discrete order (points are closed in
// a Hausdorff space, so units are singletons). V itself cannot be restricted
// to antichains: VX is ordered by reverse inclusion and is never discrete on
// a nonempty space.
// ---------------------------------------------------------------------------

inline void require_antichain(const PosetPtr& x) {
  if (!x->is_antichain_poset()) throw Error("vhat instance is defined on antichains only");
}

struct VHatLevel {
  PosetPtr base;
  PosetPtr space;
  std::vector<Mask> members;

  int index_of(Mask m) const {
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
      if (members[static_cast<size_t>(i)] == m) return i;
    throw Error("mask not found in vhat level");
  }
};

inline VHatLevel vhat_level(const PosetPtr& x) {
  require_antichain(x);
  if (x->size() > 6) throw Error("vhat object too large to materialize");
  VHatLevel lvl;
  lvl.base = x;
  lvl.members = submasks_canonical(x->full_mask());
  std::vector<std::string> labels;
  for (Mask m : lvl.members) labels.push_back(x->label_of_mask(m));
  std::vector<Mask> up(lvl.members.size());
  for (size_t i = 0; i < lvl.members.size(); ++i) up[i] = Mask{1} << i;
  lvl.space = make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up)));
  return lvl;
}

inline Monad<PosetPtr, MonotoneMap> vhat_monad() {
  Monad<PosetPtr, MonotoneMap> t;
  t.name = "vhat";
  t.base = poset_category();
  t.apply_obj = [](const PosetPtr& x) { return vhat_level(x).space; };
  t.apply_mor = [](const MonotoneMap& f) {
    auto src = vhat_level(f.source);
    auto tgt = vhat_level(f.target);
    std::vector<int> table;
    for (Mask m : src.members) table.push_back(tgt.index_of(f.image(m)));
    return make_monotone(src.space, tgt.space, std::move(table));
  };
  t.unit_at = [](const PosetPtr& x) {
    auto lvl = vhat_level(x);
    std::vector<int> table;
    for (int i = 0; i < x->size(); ++i) table.push_back(lvl.index_of(Mask{1} << i));
    return make_monotone(x, lvl.space, std::move(table));
  };
  t.mult_at = [](const PosetPtr& x) {
    auto lvl = vhat_level(x);
    auto lvl2 = vhat_level(lvl.space);
    std::vector<int> table;
    for (Mask family : lvl2.members) {
      Mask u = 0;
      for (int i = 0; i < lvl.space->size(); ++i)
        if ((family >> i) & 1) u |= lvl.members[static_cast<size_t>(i)];
      table.push_back(lvl.index_of(u));
    }
    return make_monotone(lvl2.space, lvl.space, std::move(table));
  };
  return t;
}

// ---------------------------------------------------------------------------
// Catalogs: deterministic streams of objects for the exhaustive sweeps.
// ---------------------------------------------------------------------------

inline std::vector<SetObj> set_catalog(int max_size) {
  std::vector<SetObj> out;
  for (int n = 0; n <= max_size; ++n) out.push_back(standard_finset(n));
  return out;
}

struct PosetCatalogEntry {
  PosetPtr poset;
  std::string name;
};

namespace detail {

/// All partial orders on n labeled points, as up-mask tables.
inline std::vector<std::vector<Mask>> labeled_posets(int n) {
  std::vector<std::vector<Mask>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  const int npairs = n * (n - 1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << npairs); ++bits) {
    std::vector<Mask> up(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = Mask{1} << i;
    for (int k = 0; k < npairs; ++k)
      if ((bits >> k) & 1) up[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)] |=
          Mask{1} << pairs[static_cast<size_t>(k)].second;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && ((up[static_cast<size_t>(i)] >> j) & 1)) {
          if ((up[static_cast<size_t>(j)] >> i) & 1) ok = false;                       // antisymmetry
          else if (!subset_of(up[static_cast<size_t>(j)], up[static_cast<size_t>(i)])) ok = false;  // transitivity
        }
    if (ok) out.push_back(std::move(up));
  }
  return out;
}

inline std::uint64_t canonical_signature(const std::vector<Mask>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t sig = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((up[static_cast<size_t>(perm[static_cast<size_t>(i)])] >>
             perm[static_cast<size_t>(j)]) & 1)
          sig |= std::uint64_t{1} << bit;
        ++bit;
      }
    best = std::min(best, sig);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// All posets of each size up to `max_size`, one representative per
/// isomorphism class, in a deterministic order. Exhaustive enumeration is
/// supported up to size 5 (sizes 0..5 give 1, 1, 2, 5, 16, 63 classes).
inline std::vector<PosetCatalogEntry> poset_catalog(int max_size) {
  static std::map<int, std::vector<PosetCatalogEntry>> cache;
  std::vector<PosetCatalogEntry> out;
  for (int n = 0; n <= max_size; ++n) {
    if (n > 5) throw Error("exhaustive poset catalog is capped at size 5");
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::map<std::uint64_t, std::vector<Mask>> classes;
      for (auto& up : detail::labeled_posets(n)) classes.emplace(detail::canonical_signature(up), up);
      std::vector<PosetCatalogEntry> entries;
      int k = 0;
      for (auto& [sig, up] : classes) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        entries.push_back(PosetCatalogEntry{
            make_poset(FinPoset::from_closed_table(std::move(labels), std::vector<Mask>(up))),
            "poset" + std::to_string(n) + "#" + std::to_string(k++)});
      }
      it = cache.emplace(n, std::move(entries)).first;
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

/// Seeded random posets of a fixed size (sizes beyond the exhaustive cap).
/// Random edges over a random topological order, then transitive closure.
inline std::vector<PosetCatalogEntry> random_poset_samples(int size, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(size)));
  std::vector<PosetCatalogEntry> out;
  for (int s = 0; s < count; ++s) {
    std::vector<int> order(static_cast<size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> labels;
    for (int i = 0; i < size; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (rng() % 3 == 0)
          edges.emplace_back(labels[static_cast<size_t>(order[static_cast<size_t>(i)])],
                             labels[static_cast<size_t>(order[static_cast<size_t>(j)])]);
    out.push_back(PosetCatalogEntry{build_poset(labels, edges),
                                    "rposet" + std::to_string(size) + "#" + std::to_string(s)});
  }
  return out;
}

/// Antichain entries of the poset catalog, the finite Stone spaces.
inline std::vector<PosetCatalogEntry> antichain_catalog(int max_size) {
  std::vector<PosetCatalogEntry> out;
  for (int n = 0; n <= max_size; ++n)
    out.push_back(PosetCatalogEntry{antichain_poset(n, "e"), "stone" + std::to_string(n)});
  return out;
}

}  // namespace findual
