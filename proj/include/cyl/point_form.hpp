#pragma once

#include <unordered_map>
#include <vector>

#include "cyl/normal_form.hpp"
#include "cyl/structure.hpp"

namespace cyl {

// The unique degree-h form satisfied by a node: color read off the node's
// memberships, subs[i] collecting the degree-(h-1) forms of the nodes w with
// (w, v) in T_i — the predecessors, matching the direction of the operator
// T_i*X = {y : exists x in X with (x,y) in T_i}, so that the form evaluates
// at v exactly as the complex algebra does even on asymmetric relations.
// Total and deterministic on every structure, which is the frame-level face
// of the partition-of-unity property.
//
// The recursion revisits nodes heavily, so results are memoized per
// (node, degree). A PointFormCache is confined to one structure/valuation
// pair and one caller.
class PointFormCache {
 public:
  PointFormCache(const AtomStructure& s, const Valuation& e, FormPool& pool)
      : s_(s), e_(e), pool_(pool) {}

  FormId at(int v, int h) {
    if (h < 0) throw std::out_of_range("point_form: negative degree");
    std::uint64_t key = (static_cast<std::uint64_t>(v) << 20) | static_cast<std::uint64_t>(h);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Params& p = pool_.params();
    GenMask color = node_color(p, s_, e_, v);
    std::vector<std::vector<FormId>> subs(p.n);
    if (h > 0)
      for (int i = 0; i < p.n; ++i)
        for (int w = 0; w < s_.size(); ++w)
          if (s_.in_t(i, w, v)) subs[i].push_back(at(w, h - 1));
    FormId f = pool_.make(h, color, std::move(subs));
    memo_.emplace(key, f);
    return f;
  }

 private:
  const AtomStructure& s_;
  const Valuation& e_;
  FormPool& pool_;
  std::unordered_map<std::uint64_t, FormId> memo_;
};

inline FormId point_form(const AtomStructure& s, const Valuation& e, int v,
                         int h, FormPool& pool) {
  PointFormCache cache(s, e, pool);
  return cache.at(v, h);
}

// (Cm(S), e, v) |= f, decided by comparing f against the node's point form.
inline bool models(const AtomStructure& s, const Valuation& e, int v, FormId f,
                   FormPool& pool) {
  return point_form(s, e, v, pool.degree(f), pool) == f;
}

}  // namespace cyl
