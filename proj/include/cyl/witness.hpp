#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyl/conditions.hpp"
#include "cyl/normal_form.hpp"
#include "cyl/point_form.hpp"
#include "cyl/structure.hpp"
#include "cyl/tuples.hpp"

namespace cyl {

// The finite witness structure for a normal form. A labeled tree of depth k
// is grown from a root carrying the form: each node at level l spawns, in
// every direction other than the one it was spawned in, one fresh child per
// positively cylindrified lower-degree form, and each child family plus its
// parent becomes one T_i-clique. A child is omitted when its color shares a
// d_ij (j != i) with the parent's color, in which case the parent itself
// already accounts for that conjunct.
//
// For the nca variant the last level additionally receives tuple parts: every
// last-level node whose diagonal pattern is an equivalence relation gets the
// substitution closure of a realizing tuple, glued on by the agreement
// relations. These parts supply the witnesses the diagonal-composition
// condition demands. Nodes spawned in direction i do not connect to their
// tuples in direction i (their i-clique already contains parent and
// siblings); the root connects in every direction.
//
// Satisfiability of the form is then decided by verification: the complex
// algebra must land in the variant's class (condition check) and every
// labeled node must satisfy its label under the canonical valuation.

struct WitnessStructure {
  AtomStructure base;
  Valuation val;
  int root = 0;
  int degree = 0;                               // k
  std::vector<int> level;                       // -1 for tuple nodes
  std::vector<int> cls;                         // spawn direction; -1 root/tuples
  std::vector<int> parent;                      // -1 root/tuples
  std::vector<std::optional<FormId>> label;     // empty for tuple nodes
  std::vector<std::optional<PointTuple>> tuple; // set for tuple nodes

  bool is_labeled(int v) const { return label[v].has_value(); }

  int labeled_count() const {
    int c = 0;
    for (const auto& l : label) c += l.has_value() ? 1 : 0;
    return c;
  }

  std::vector<int> children(int v, int direction) const {
    std::vector<int> out;
    for (int w = 0; w < base.size(); ++w)
      if (parent[w] == v && cls[w] == direction) out.push_back(w);
    return out;
  }
};

struct WitnessOptions {
  // The child filter drops sub-forms sharing a d_ij with the parent color.
  // Disabling it is a test hook for checking that the filter never changes
  // the satisfiability verdict.
  bool apply_color_filter = true;
};

namespace detail {

// Attaches the substitution-closure part for one last-level node. Any
// equivalence diagonal pattern gets a part, including the discrete pattern
// whose realizing tuple has n distinct points; the closure of that tuple is
// what supplies per-direction witnesses for diagonal-free colors.
inline void attach_tuple_part(WitnessStructure& w, int v, int& next_point,
                              const Params& p) {
  GenMask color = w.label[v] ? w.base.diag[v] : 0;
  auto f_v = diagonal_tuple(p, color, next_point);
  if (!f_v) return;
  next_point += tuple_range_size(*f_v);
  auto closure = rep_closure({*f_v});

  std::vector<int> ids;
  std::vector<PointTuple> tuples;
  for (const auto& g : closure) {
    if (g == *f_v) continue;
    int id = w.base.add_node("g" + std::to_string(w.base.size()));
    w.level.push_back(-1);
    w.cls.push_back(-1);
    w.parent.push_back(-1);
    w.label.push_back(std::nullopt);
    w.tuple.push_back(g);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (g[i] == g[j]) w.base.set_e(i, j, id);
    ids.push_back(id);
    tuples.push_back(g);
  }

  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      for (int i = 0; i < p.n; ++i)
        if (agree_except(tuples[a], tuples[b], i))
          w.base.set_t_sym(i, ids[a], ids[b]);

  for (std::size_t a = 0; a < ids.size(); ++a)
    for (int i = 0; i < p.n; ++i) {
      if (i == w.cls[v]) continue;  // spawn-direction clique stays closed
      if (agree_except(tuples[a], *f_v, i)) w.base.set_t_sym(i, v, ids[a]);
    }
}

}  // namespace detail

inline WitnessStructure build_witness(FormPool& pool, FormId tau,
                                      const WitnessOptions& opts = {}) {
  const Params& p = pool.params();
  if (!validate_form(pool, tau, p))
    throw std::invalid_argument("build_witness: invalid form");

  WitnessStructure w;
  w.base = AtomStructure(p.n, 0);
  w.degree = pool.degree(tau);

  auto new_labeled = [&](int level, int cls, int parent, FormId f) {
    int id = w.base.add_node("u" + std::to_string(w.base.size()));
    w.level.push_back(level);
    w.cls.push_back(cls);
    w.parent.push_back(parent);
    w.label.push_back(f);
    w.tuple.push_back(std::nullopt);
    return id;
  };

  w.root = new_labeled(0, -1, -1, tau);
  std::vector<int> frontier{w.root};

  const int k = w.degree;
  for (int l = 0; l < k; ++l) {
    std::vector<int> next;
    for (int v : frontier) {
      FormId lv = *w.label[v];
      GenMask vcolor = pool.color(lv);
      for (int i = 0; i < p.n; ++i) {
        if (i == w.cls[v]) continue;
        std::vector<int> clique{v};
        for (FormId sigma : pool.subs(lv, i)) {
          if (opts.apply_color_filter) {
            bool shared = false;
            for (int j = 0; j < p.n && !shared; ++j)
              if (j != i && has_bit(pool.color(sigma), p.diag_index(i, j)) &&
                  has_bit(vcolor, p.diag_index(i, j)))
                shared = true;
            if (shared) continue;
          }
          int child = new_labeled(l + 1, i, v, sigma);
          clique.push_back(child);
          next.push_back(child);
        }
        for (std::size_t a = 0; a < clique.size(); ++a)
          for (std::size_t b = a + 1; b < clique.size(); ++b)
            w.base.set_t_sym(i, clique[a], clique[b]);
      }
    }
    frontier = std::move(next);
  }

  // Diagonal memberships of labeled nodes come straight from their colors.
  for (int v = 0; v < w.base.size(); ++v)
    if (w.label[v])
      w.base.diag[v] = pool.color(*w.label[v]) & ((GenMask{1} << (p.n * p.n)) - 1);

  if (p.variant == Variant::nca) {
    int next_point = 0;
    // frontier now holds the last level (or the root when k = 0)
    std::vector<int> last;
    for (int v = 0; v < w.base.size(); ++v)
      if (w.label[v] && w.level[v] == k) last.push_back(v);
    for (int v : last) detail::attach_tuple_part(w, v, next_point, p);
  }

  w.base.make_reflexive();

  w.val = Valuation(p.m, w.base.size());
  for (int v = 0; v < w.base.size(); ++v)
    if (w.label[v])
      for (int l = 0; l < p.m; ++l)
        if (has_bit(pool.color(*w.label[v]), p.var_index(l))) w.val.set(l, v);

  return w;
}

// Result of the satisfiability decision, with the witness and verification
// data as certificate.
struct SatResult {
  bool satisfiable = false;
  WitnessStructure witness;
  ConditionReport conditions;
  std::string failure;  // first failing condition or node when unsatisfiable

  explicit operator bool() const { return satisfiable; }
};

inline SatResult is_satisfiable(FormPool& pool, FormId tau,
                                const WitnessOptions& opts = {}) {
  const Params& p = pool.params();
  SatResult r;
  r.witness = build_witness(pool, tau, opts);
  r.conditions = check_conditions(r.witness.base, p.variant);
  if (!r.conditions.all_pass) {
    r.satisfiable = false;
    r.failure = "conditions: " + r.conditions.first_failure();
    return r;
  }
  PointFormCache cache(r.witness.base, r.witness.val, pool);
  for (int v = 0; v < r.witness.base.size(); ++v) {
    if (!r.witness.label[v]) continue;
    FormId lv = *r.witness.label[v];
    if (cache.at(v, pool.degree(lv)) != lv) {
      r.satisfiable = false;
      r.failure = "label not satisfied at node " + r.witness.base.names[v];
      return r;
    }
  }
  r.satisfiable = true;
  return r;
}

}  // namespace cyl
