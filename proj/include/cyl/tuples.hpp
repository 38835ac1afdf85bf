#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cyl/params.hpp"

namespace cyl {

// Length-n sequences of abstract points, used for the representability parts
// of witness structures. Points are plain integers from a fresh-point
// allocator, so tuples from distinct nodes have disjoint ranges.
using PointTuple = std::vector<int>;

// g =_i h : equal everywhere except possibly at position i.
inline bool agree_except(const PointTuple& g, const PointTuple& h, int i) {
  for (std::size_t j = 0; j < g.size(); ++j)
    if (static_cast<int>(j) != i && g[j] != h[j]) return false;
  return true;
}

// The substitution operator C_k^{i,j}: when k is outside {i,j} and
// f(i) = f(j), copy that value into position k; otherwise leave f alone.
inline PointTuple apply_c(const PointTuple& f, int i, int j, int k) {
  if (k == i || k == j) return f;
  if (f[i] != f[j]) return f;
  PointTuple g = f;
  g[k] = f[i];
  return g;
}

// Least set containing the seeds and closed under every C_k^{i,j}. The
// tuples live in a finite power of the seed ranges, so the closure has at
// most n^n members and the iteration terminates.
inline std::set<PointTuple> rep_closure(const std::set<PointTuple>& seeds) {
  if (seeds.empty())
    throw std::invalid_argument("rep_closure: empty seed set");
  const int n = static_cast<int>(seeds.begin()->size());
  std::set<PointTuple> closed = seeds;
  std::vector<PointTuple> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    PointTuple f = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          PointTuple g = apply_c(f, i, j, k);
          if (closed.insert(g).second) frontier.push_back(g);
        }
  }
  return closed;
}

// The diagonal pattern of a color, as a relation on n. A tuple realizing the
// color must satisfy f(i) = f(j) iff d_ij is positive; such a tuple exists
// exactly when the pattern is an equivalence relation on n. Points are taken
// from next_point upward; the caller advances its allocator by the returned
// range size.
inline std::optional<PointTuple> diagonal_tuple(const Params& p, GenMask color,
                                                int next_point) {
  const int n = p.n;
  auto rel = [&](int i, int j) { return has_bit(color, p.diag_index(i, j)); };
  for (int i = 0; i < n; ++i)
    if (!rel(i, i)) return std::nullopt;  // irreflexive pattern: no tuple
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel(i, j) != rel(j, i)) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rel(i, j) && rel(j, k) && !rel(i, k)) return std::nullopt;
  PointTuple f(n, -1);
  int classes = 0;
  for (int i = 0; i < n; ++i) {
    if (f[i] >= 0) continue;
    int point = next_point + classes++;
    for (int j = i; j < n; ++j)
      if (rel(i, j)) f[j] = point;
  }
  return f;
}

inline int tuple_range_size(const PointTuple& f) {
  std::set<int> pts(f.begin(), f.end());
  return static_cast<int>(pts.size());
}

// Representability in the strict sense: a realizing tuple with at most n-1
// distinct points, i.e. the pattern identifies at least one pair i != j.
inline std::optional<PointTuple> representing_tuple(const Params& p,
                                                    GenMask color,
                                                    int next_point) {
  auto f = diagonal_tuple(p, color, next_point);
  if (!f) return std::nullopt;
  if (tuple_range_size(*f) > p.n - 1) return std::nullopt;
  return f;
}

}  // namespace cyl
