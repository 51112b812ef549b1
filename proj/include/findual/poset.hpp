#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "findual/errors.hpp"

namespace findual {

/// Subsets of a carrier are bitmasks over element indices. Carriers are
/// capped at 64 elements; exhaustive sweeps keep them far smaller.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// All submasks of `universe`, sorted by (cardinality, numeric value).
/// This is the canonical enumeration order used everywhere.
inline std::vector<Mask> submasks_canonical(Mask universe) {
  std::vector<Mask> out;
  Mask s = 0;
  for (;;) {
    out.push_back(s);
    if (s == universe) break;
    s = (s - universe) & universe;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int ca = popcount(a), cb = popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

/// A finite poset: distinct element labels plus the full order table,
/// stored as per-element up-set and down-set masks. The order is reflexive,
/// transitive and antisymmetric by construction.
///
/// Convention committed project-wide: x <= y means y lies in the closure of
/// {x}, so opens are down-sets and closed sets are up-sets. The Sierpinski
/// space {0,1} with {1} open therefore has 1 < 0.
class FinPoset {
 public:
  FinPoset() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  Mask full_mask() const {
    return size() == 0 ? 0 : (size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1));
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  bool le(int i, int j) const { return (up_[static_cast<size_t>(i)] >> j) & 1; }
  bool lt(int i, int j) const { return i != j && le(i, j); }

  /// {j | i <= j}: the closure of {i}.
  Mask up_of(int i) const { return up_[static_cast<size_t>(i)]; }
  /// {j | j <= i}: the principal open at i.
  Mask down_of(int i) const { return down_[static_cast<size_t>(i)]; }

  std::optional<int> index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<size_t>(i)] == label) return i;
    return std::nullopt;
  }

  int index_of_checked(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw UnknownLabel(label);
    return *i;
  }

  Mask up_closure(Mask m) const {
    Mask out = 0;
    for (int i = 0; i < size(); ++i)
      if ((m >> i) & 1) out |= up_[static_cast<size_t>(i)];
    return out;
  }

  Mask down_closure(Mask m) const {
    Mask out = 0;
    for (int i = 0; i < size(); ++i)
      if ((m >> i) & 1) out |= down_[static_cast<size_t>(i)];
    return out;
  }

  bool is_down_set(Mask m) const { return down_closure(m) == m; }
  bool is_up_set(Mask m) const { return up_closure(m) == m; }
  bool is_antichain_poset() const {
    for (int i = 0; i < size(); ++i)
      if (up_[static_cast<size_t>(i)] != (Mask{1} << i)) return false;
    return true;
  }

  bool operator==(const FinPoset& o) const {
    return labels_ == o.labels_ && up_ == o.up_;
  }
  bool operator!=(const FinPoset& o) const { return !(*this == o); }

  /// Covering pairs (transitive reduction), in (lower, upper) index order.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        if (!lt(i, j)) continue;
        bool direct = true;
        for (int k = 0; k < size() && direct; ++k)
          if (k != i && k != j && lt(i, k) && lt(k, j)) direct = false;
        if (direct) covers.emplace_back(i, j);
      }
    return covers;
  }

  std::string label_of_mask(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i)
      if ((m >> i) & 1) {
        if (!first) s += ",";
        s += labels_[static_cast<size_t>(i)];
        first = false;
      }
    return s + "}";
  }

  /// Builds a poset from a validated, already closed order table.
  /// `up[i]` must contain bit i. Used by the factory functions below.
  static FinPoset from_closed_table(std::vector<std::string> labels, std::vector<Mask> up) {
    FinPoset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.down_.assign(p.labels_.size(), 0);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if ((p.up_[static_cast<size_t>(i)] >> j) & 1) p.down_[static_cast<size_t>(j)] |= Mask{1} << i;
    return p;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> up_;    // up_[i] = {j | i <= j}
  std::vector<Mask> down_;  // down_[i] = {j | j <= i}
};

using PosetPtr = std::shared_ptr<const FinPoset>;

inline bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Builds the reflexive-transitive closure of `pairs` over `labels`.
/// Rejects 2-cycles (AntisymmetryViolation) and labels outside the carrier.
inline PosetPtr build_poset(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw Error("poset carrier exceeds 64 elements");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
        throw Error("duplicate label: " + labels[static_cast<size_t>(i)]);

  std::vector<Mask> up(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = Mask{1} << i;

  auto index = [&](const std::string& l) -> int {
    for (int i = 0; i < n; ++i)
      if (labels[static_cast<size_t>(i)] == l) return i;
    throw UnknownLabel(l);
  };
  for (const auto& [a, b] : pairs) up[static_cast<size_t>(index(a))] |= Mask{1} << index(b);

  // Warshall closure on the up-masks.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((up[static_cast<size_t>(i)] >> k) & 1) up[static_cast<size_t>(i)] |= up[static_cast<size_t>(k)];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((up[static_cast<size_t>(i)] >> j) & 1) && ((up[static_cast<size_t>(j)] >> i) & 1))
        throw AntisymmetryViolation(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);

  return std::make_shared<FinPoset>(FinPoset::from_closed_table(labels, std::move(up)));
}

inline PosetPtr make_poset(FinPoset p) { return std::make_shared<FinPoset>(std::move(p)); }

/// Convenience factories used throughout the tests and suites.
inline PosetPtr empty_poset() { return build_poset({}, {}); }
inline PosetPtr singleton_poset(const std::string& label = "*") { return build_poset({label}, {}); }
inline PosetPtr chain_poset(int n, const std::string& prefix = "c") {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(i + 1)]);
  return build_poset(labels, pairs);
}
inline PosetPtr antichain_poset(int n, const std::string& prefix = "a") {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return build_poset(labels, {});
}
/// The Sierpinski space: {1} open, so 1 < 0 under the committed order.
inline PosetPtr sierpinski_poset() { return build_poset({"1", "0"}, {{"1", "0"}}); }

enum class ClosureKind { down, up, none };

/// A subset of a poset carrier together with its closure discipline.
/// Down-closed subsets are the opens, up-closed subsets the closed sets.
struct SubSet {
  PosetPtr parent;
  Mask mask = 0;
  ClosureKind closure_kind = ClosureKind::none;

  std::string label() const { return parent->label_of_mask(mask); }
};

/// All down-closed subsets (the opens) in canonical order.
inline std::vector<SubSet> down_sets(const PosetPtr& p) {
  std::vector<SubSet> out;
  for (Mask m : submasks_canonical(p->full_mask()))
    if (p->is_down_set(m)) out.push_back(SubSet{p, m, ClosureKind::down});
  return out;
}

/// All up-closed subsets (the closed sets) in canonical order.
inline std::vector<SubSet> up_sets(const PosetPtr& p) {
  std::vector<SubSet> out;
  for (Mask m : submasks_canonical(p->full_mask()))
    if (p->is_up_set(m)) out.push_back(SubSet{p, m, ClosureKind::up});
  return out;
}

inline std::vector<Mask> down_set_masks(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask m : submasks_canonical(p.full_mask()))
    if (p.is_down_set(m)) out.push_back(m);
  return out;
}

inline std::vector<Mask> up_set_masks(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask m : submasks_canonical(p.full_mask()))
    if (p.is_up_set(m)) out.push_back(m);
  return out;
}

/// A monotone total map between finite posets. At finite scale these are
/// exactly the spectral maps.
struct MonotoneMap {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> table;

  int apply(int i) const { return table[static_cast<size_t>(i)]; }

  Mask image(Mask m) const {
    Mask out = 0;
    for (int i = 0; i < source->size(); ++i)
      if ((m >> i) & 1) out |= Mask{1} << table[static_cast<size_t>(i)];
    return out;
  }

  Mask preimage(Mask m) const {
    Mask out = 0;
    for (int i = 0; i < source->size(); ++i)
      if ((m >> table[static_cast<size_t>(i)]) & 1) out |= Mask{1} << i;
    return out;
  }

  /// Open maps send down-sets to down-sets.
  bool is_open() const {
    for (Mask m : down_set_masks(*source))
      if (!target->is_down_set(image(m))) return false;
    return true;
  }

  bool operator==(const MonotoneMap& o) const {
    return same_poset(source, o.source) && same_poset(target, o.target) && table == o.table;
  }
};

inline MonotoneMap make_monotone(PosetPtr src, PosetPtr tgt, std::vector<int> table) {
  const int n = src->size();
  if (static_cast<int>(table.size()) != n) throw Error("map table has wrong arity");
  for (int v : table)
    if (v < 0 || v >= tgt->size()) throw Error("map table value out of range");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (src->le(i, j) && !tgt->le(table[static_cast<size_t>(i)], table[static_cast<size_t>(j)]))
        throw NotMonotone(src->label(i), src->label(j));
  return MonotoneMap{std::move(src), std::move(tgt), std::move(table)};
}

inline MonotoneMap identity_map(const PosetPtr& p) {
  std::vector<int> t(static_cast<size_t>(p->size()));
  std::iota(t.begin(), t.end(), 0);
  return MonotoneMap{p, p, std::move(t)};
}

inline MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f) {
  if (!same_poset(f.target, g.source)) throw SourceTargetMismatch("map composition");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[static_cast<size_t>(f.table[i])];
  return MonotoneMap{f.source, g.target, std::move(t)};
}

/// All monotone maps src -> tgt, in lexicographic table order.
inline std::vector<MonotoneMap> all_monotone_maps(const PosetPtr& src, const PosetPtr& tgt) {
  std::vector<MonotoneMap> out;
  const int n = src->size(), m = tgt->size();
  if (n == 0) {
    out.push_back(MonotoneMap{src, tgt, {}});
    return out;
  }
  if (m == 0) return out;  // no maps from nonempty into empty
  std::vector<int> t(static_cast<size_t>(n), 0);
  auto monotone_so_far = [&](int upto) {
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j) {
        if (src->le(i, j) && !tgt->le(t[static_cast<size_t>(i)], t[static_cast<size_t>(j)])) return false;
      }
    return true;
  };
  int pos = 0;
  for (;;) {
    if (pos == n) {
      out.push_back(MonotoneMap{src, tgt, t});
      --pos;
      ++t[static_cast<size_t>(pos)];
    }
    if (pos < 0) break;
    if (t[static_cast<size_t>(pos)] >= m) {
      t[static_cast<size_t>(pos)] = 0;
      --pos;
      if (pos < 0) break;
      ++t[static_cast<size_t>(pos)];
      continue;
    }
    if (monotone_so_far(pos)) {
      ++pos;
    } else {
      ++t[static_cast<size_t>(pos)];
    }
  }
  return out;
}

struct PosetSum {
  PosetPtr sum;
  MonotoneMap inj1;
  MonotoneMap inj2;
};

/// Topological sum: disjoint union carrier, no cross pairs. Labels are kept
/// when the two carriers are disjoint and prefixed with "1:"/"2:" otherwise.
inline PosetSum poset_sum(const PosetPtr& x1, const PosetPtr& x2) {
  bool clash = false;
  for (const auto& l : x2->labels())
    if (x1->index_of(l)) clash = true;
  std::vector<std::string> labels;
  for (const auto& l : x1->labels()) labels.push_back(clash ? "1:" + l : l);
  for (const auto& l : x2->labels()) labels.push_back(clash ? "2:" + l : l);

  const int n1 = x1->size(), n2 = x2->size();
  std::vector<Mask> up(static_cast<size_t>(n1 + n2), 0);
  for (int i = 0; i < n1; ++i) up[static_cast<size_t>(i)] = x1->up_of(i);
  for (int i = 0; i < n2; ++i) up[static_cast<size_t>(n1 + i)] = x2->up_of(i) << n1;
  auto sum = make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up)));

  std::vector<int> t1(static_cast<size_t>(n1)), t2(static_cast<size_t>(n2));
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), n1);
  return PosetSum{sum, MonotoneMap{x1, sum, std::move(t1)}, MonotoneMap{x2, sum, std::move(t2)}};
}

struct PosetProduct {
  PosetPtr product;
  MonotoneMap proj1;
  MonotoneMap proj2;
  std::vector<std::pair<int, int>> coords;  // product index -> (index in x1, index in x2)

  int pair_index(int i, int j) const {
    for (int k = 0; k < static_cast<int>(coords.size()); ++k)
      if (coords[static_cast<size_t>(k)] == std::pair<int, int>{i, j}) return k;
    throw Error("pair index out of range");
  }
};

/// Topological product: componentwise order on the Cartesian product.
inline PosetProduct poset_product(const PosetPtr& x1, const PosetPtr& x2) {
  const int n1 = x1->size(), n2 = x2->size();
  if (n1 * n2 > kMaxElements) throw Error("product carrier exceeds 64 elements");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> coords;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      labels.push_back("(" + x1->label(i) + "," + x2->label(j) + ")");
      coords.emplace_back(i, j);
    }
  const int n = n1 * n2;
  std::vector<Mask> up(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [i1, j1] = coords[static_cast<size_t>(a)];
      auto [i2, j2] = coords[static_cast<size_t>(b)];
      if (x1->le(i1, i2) && x2->le(j1, j2)) up[static_cast<size_t>(a)] |= Mask{1} << b;
    }
  auto prod = make_poset(FinPoset::from_closed_table(std::move(labels), std::move(up)));
  std::vector<int> t1, t2;
  for (auto [i, j] : coords) {
    t1.push_back(i);
    t2.push_back(j);
  }
  return PosetProduct{prod, MonotoneMap{prod, x1, std::move(t1)},
                      MonotoneMap{prod, x2, std::move(t2)}, std::move(coords)};
}

/// Order isomorphism search by backtracking, with degree/height pruning.
/// Returns the first solution in index order, or nullopt.
inline std::optional<std::vector<int>> poset_iso(const FinPoset& p, const FinPoset& q) {
  const int n = p.size();
  if (q.size() != n) return std::nullopt;
  // Per-element invariants: (|down|, |up|, covers up, covers down).
  auto signature = [](const FinPoset& r, int i) {
    int cov_up = 0, cov_dn = 0;
    for (int j = 0; j < r.size(); ++j) {
      if (r.lt(i, j)) {
        bool direct = true;
        for (int k = 0; k < r.size() && direct; ++k)
          if (k != i && k != j && r.lt(i, k) && r.lt(k, j)) direct = false;
        if (direct) ++cov_up;
      }
      if (r.lt(j, i)) {
        bool direct = true;
        for (int k = 0; k < r.size() && direct; ++k)
          if (k != i && k != j && r.lt(j, k) && r.lt(k, i)) direct = false;
        if (direct) ++cov_dn;
      }
    }
    return std::array<int, 4>{popcount(r.down_of(i)), popcount(r.up_of(i)), cov_up, cov_dn};
  };
  std::vector<std::array<int, 4>> sig_p(static_cast<size_t>(n)), sig_q(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sig_p[static_cast<size_t>(i)] = signature(p, i);
  for (int i = 0; i < n; ++i) sig_q[static_cast<size_t>(i)] = signature(q, i);
  {
    auto sp = sig_p, sq = sig_q;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto consistent = [&](int i, int cand) {
    if (sig_p[static_cast<size_t>(i)] != sig_q[static_cast<size_t>(cand)]) return false;
    for (int j = 0; j < i; ++j) {
      int cj = map[static_cast<size_t>(j)];
      if (p.le(i, j) != q.le(cand, cj)) return false;
      if (p.le(j, i) != q.le(cj, cand)) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<size_t>(cand)] || !consistent(i, cand)) continue;
      map[static_cast<size_t>(i)] = cand;
      used[static_cast<size_t>(cand)] = true;
      if (rec(i + 1)) return true;
      used[static_cast<size_t>(cand)] = false;
      map[static_cast<size_t>(i)] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

}  // namespace findual
