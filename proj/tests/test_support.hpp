#pragma once

#include <random>
#include <vector>

#include "cyl/conditions.hpp"
#include "cyl/structure.hpp"
#include "cyl/term.hpp"

namespace cyl::testing {

// Random AST with bounded size/depth; indices drawn within the params.
inline TermPtr random_term(const Params& p, std::mt19937_64& rng, int depth_budget,
                           int size_budget = 12) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> ndist(0, p.n - 1);
  for (;;) {
    int k = pick(rng);
    if (size_budget <= 1 && k >= 4) continue;
    switch (k) {
      case 0: return t_zero();
      case 1: return t_one();
      case 2: return t_diag(ndist(rng), ndist(rng));
      case 3: {
        if (p.m == 0) continue;
        std::uniform_int_distribution<int> mdist(0, p.m - 1);
        return t_var(mdist(rng));
      }
      case 4:
        return t_neg(random_term(p, rng, depth_budget, size_budget - 1));
      case 5: {
        if (depth_budget <= 0) continue;
        return t_cyl(ndist(rng),
                     random_term(p, rng, depth_budget - 1, size_budget - 1));
      }
      case 6:
        return t_and(random_term(p, rng, depth_budget, size_budget / 2),
                     random_term(p, rng, depth_budget, size_budget / 2));
      case 7:
        return t_or(random_term(p, rng, depth_budget, size_budget / 2),
                    random_term(p, rng, depth_budget, size_budget / 2));
    }
  }
}

// Fully random structure: arbitrary relations and diagonal sets. Most of
// these violate the frame conditions, which is the point for the
// axiom/condition cross checks.
inline AtomStructure random_raw_structure(const Params& p, std::mt19937_64& rng,
                                          int max_nodes) {
  std::uniform_int_distribution<int> size_dist(1, max_nodes);
  int sz = size_dist(rng);
  AtomStructure s(p.n, sz);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < p.n; ++i)
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b)
        if (bit(rng)) s.set_t(i, a, b);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      for (int v = 0; v < sz; ++v)
        if (bit(rng)) s.set_e(i, j, v);
  return s;
}

// Random structure with equivalence T_i and E_ii = S: passes the basic
// conditions, the diagonal conditions only sometimes.
inline AtomStructure random_partition_structure(const Params& p,
                                                std::mt19937_64& rng,
                                                int max_nodes) {
  std::uniform_int_distribution<int> size_dist(1, max_nodes);
  int sz = size_dist(rng);
  AtomStructure s(p.n, sz);
  for (int i = 0; i < p.n; ++i) {
    std::vector<int> block(sz);
    std::uniform_int_distribution<int> bdist(0, sz - 1);
    for (int v = 0; v < sz; ++v) block[v] = bdist(rng);
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b)
        if (block[a] == block[b]) s.set_t(i, a, b);
  }
  std::uniform_int_distribution<int> bit(0, 1);
  for (int v = 0; v < sz; ++v) {
    for (int i = 0; i < p.n; ++i) s.set_e(i, i, v);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (i != j && bit(rng)) s.set_e(i, j, v);
  }
  return s;
}

// Rejection-samples a structure passing the variant's conditions.
inline AtomStructure random_valid_structure(const Params& p, std::mt19937_64& rng,
                                            int max_nodes) {
  for (;;) {
    AtomStructure s = random_partition_structure(p, rng, max_nodes);
    // Bias toward symmetric diagonal sets, which pass far more often.
    for (int v = 0; v < s.size(); ++v)
      for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
          if (s.in_e(i, j, v) != s.in_e(j, i, v)) {
            s.set_e(i, j, v, false);
            s.set_e(j, i, v, false);
          }
    if (check_conditions(s, p.variant).all_pass) return s;
  }
}

inline Valuation random_valuation(const Params& p, const AtomStructure& s,
                                  std::mt19937_64& rng) {
  Valuation e(p.m, s.size());
  std::uniform_int_distribution<int> bit(0, 1);
  for (int l = 0; l < p.m; ++l)
    for (int v = 0; v < s.size(); ++v)
      if (bit(rng)) e.set(l, v);
  return e;
}

}  // namespace cyl::testing
