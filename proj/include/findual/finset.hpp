#pragma once

#include <memory>
#include <string>
#include <vector>

#include "findual/monad.hpp"
#include "findual/poset.hpp"

namespace findual {

/// A finite set: just distinct labels. Used as the base for the powerset
/// and filter monads; the order-theoretic instances live on FinPoset.
struct FinSet {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  Mask full_mask() const {
    return size() == 0 ? 0 : (size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1));
  }
  const std::string& label(int i) const { return labels[static_cast<size_t>(i)]; }
  std::string label_of_mask(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i)
      if ((m >> i) & 1) {
        if (!first) s += ",";
        s += labels[static_cast<size_t>(i)];
        first = false;
      }
    return s + "}";
  }
  bool operator==(const FinSet& o) const { return labels == o.labels; }
};

using SetObj = std::shared_ptr<const FinSet>;

inline SetObj make_finset(std::vector<std::string> labels) {
  return std::make_shared<FinSet>(FinSet{std::move(labels)});
}

inline SetObj standard_finset(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return make_finset(std::move(labels));
}

struct SetMor {
  SetObj source;
  SetObj target;
  std::vector<int> table;

  int apply(int i) const { return table[static_cast<size_t>(i)]; }
  Mask image(Mask m) const {
    Mask out = 0;
    for (int i = 0; i < source->size(); ++i)
      if ((m >> i) & 1) out |= Mask{1} << table[static_cast<size_t>(i)];
    return out;
  }
};

inline std::vector<SetMor> all_functions(const SetObj& x, const SetObj& y) {
  std::vector<SetMor> out;
  const int n = x->size(), m = y->size();
  if (n == 0) {
    out.push_back(SetMor{x, y, {}});
    return out;
  }
  if (m == 0) return out;
  std::vector<int> t(static_cast<size_t>(n), 0);
  for (;;) {
    out.push_back(SetMor{x, y, t});
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

inline CategoryOps<SetObj, SetMor> finset_category() {
  CategoryOps<SetObj, SetMor> c;
  c.object_kind = "finite set";
  c.obj_eq = [](const SetObj& a, const SetObj& b) { return a == b || *a == *b; };
  c.mor_eq = [](const SetMor& a, const SetMor& b) {
    return (a.source == b.source || *a.source == *b.source) &&
           (a.target == b.target || *a.target == *b.target) && a.table == b.table;
  };
  c.obj_name = [](const SetObj& x) {
    std::string s = "{";
    for (int i = 0; i < x->size(); ++i) s += (i ? "," : "") + x->label(i);
    return s + "}";
  };
  c.source = [](const SetMor& f) { return f.source; };
  c.target = [](const SetMor& f) { return f.target; };
  c.identity = [](const SetObj& x) {
    std::vector<int> t(static_cast<size_t>(x->size()));
    std::iota(t.begin(), t.end(), 0);
    return SetMor{x, x, std::move(t)};
  };
  c.compose = [](const SetMor& g, const SetMor& f) {
    if (!(f.target == g.source || *f.target == *g.source))
      throw SourceTargetMismatch("set map composition");
    std::vector<int> t(f.table.size());
    for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[static_cast<size_t>(f.table[i])];
    return SetMor{f.source, g.target, std::move(t)};
  };
  c.hom = all_functions;
  c.mor_injective = [](const SetMor& f) {
    std::vector<bool> hit(static_cast<size_t>(f.target->size()), false);
    for (int v : f.table) {
      if (hit[static_cast<size_t>(v)]) return false;
      hit[static_cast<size_t>(v)] = true;
    }
    return true;
  };
  return c;
}

inline CategoryOps<PosetPtr, MonotoneMap> poset_category() {
  CategoryOps<PosetPtr, MonotoneMap> c;
  c.object_kind = "finite poset";
  c.obj_eq = [](const PosetPtr& a, const PosetPtr& b) { return same_poset(a, b); };
  c.mor_eq = [](const MonotoneMap& a, const MonotoneMap& b) { return a == b; };
  c.obj_name = [](const PosetPtr& x) {
    std::string s = "P{";
    for (int i = 0; i < x->size(); ++i) s += (i ? "," : "") + x->label(i);
    s += "}";
    auto covers = x->cover_pairs();
    if (!covers.empty()) {
      s += "[";
      for (size_t i = 0; i < covers.size(); ++i) {
        if (i) s += ",";
        s += x->label(covers[i].first) + "<" + x->label(covers[i].second);
      }
      s += "]";
    }
    return s;
  };
  c.source = [](const MonotoneMap& f) { return f.source; };
  c.target = [](const MonotoneMap& f) { return f.target; };
  c.identity = [](const PosetPtr& x) { return identity_map(x); };
  c.compose = [](const MonotoneMap& g, const MonotoneMap& f) { return compose_maps(g, f); };
  c.hom = all_monotone_maps;
  c.mor_injective = [](const MonotoneMap& f) {
    std::vector<bool> hit(static_cast<size_t>(f.target->size()), false);
    for (int v : f.table) {
      if (hit[static_cast<size_t>(v)]) return false;
      hit[static_cast<size_t>(v)] = true;
    }
    return true;
  };
  return c;
}

}  // namespace findual
