#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyl/params.hpp"

namespace cyl {

// A finite relational structure <S, T_i, E_ij>: nodes 0..size-1, one binary
// relation per direction, and per-node diagonal membership. No conditions
// are assumed; they are checked, not built in.
struct AtomStructure {
  int n = 2;
  std::vector<std::string> names;            // node names, size |S|
  std::vector<std::vector<std::uint8_t>> t;  // t[i]: |S| x |S| adjacency
  std::vector<std::uint64_t> diag;           // diag[v]: bitmask over i*n+j

  AtomStructure() = default;
  AtomStructure(int n_, int size) : n(n_) { resize(size); }

  int size() const { return static_cast<int>(names.size()); }

  void resize(int size) {
    names.resize(size);
    for (int v = 0; v < size; ++v)
      if (names[v].empty()) names[v] = "u" + std::to_string(v);
    t.assign(n, {});
    for (auto& rel : t) rel.assign(static_cast<std::size_t>(size) * size, 0);
    diag.assign(size, 0);
  }

  int add_node(const std::string& name = "") {
    int sz = size();
    names.push_back(name.empty() ? "u" + std::to_string(sz) : name);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint8_t> grown(static_cast<std::size_t>(sz + 1) * (sz + 1), 0);
      for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
          grown[static_cast<std::size_t>(a) * (sz + 1) + b] =
              t[i][static_cast<std::size_t>(a) * sz + b];
      t[i] = std::move(grown);
    }
    diag.push_back(0);
    return sz;
  }

  bool in_t(int i, int a, int b) const {
    return t[i][static_cast<std::size_t>(a) * size() + b] != 0;
  }
  void set_t(int i, int a, int b, bool val = true) {
    t[i][static_cast<std::size_t>(a) * size() + b] = val ? 1 : 0;
  }
  void set_t_sym(int i, int a, int b) {
    set_t(i, a, b);
    set_t(i, b, a);
  }

  bool in_e(int i, int j, int v) const { return (diag[v] >> (i * n + j)) & 1; }
  void set_e(int i, int j, int v, bool val = true) {
    std::uint64_t bit = std::uint64_t{1} << (i * n + j);
    if (val)
      diag[v] |= bit;
    else
      diag[v] &= ~bit;
  }

  void make_reflexive() {
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < size(); ++v) set_t(i, v, v);
  }

  std::vector<int> t_neighbors(int i, int v) const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
      if (in_t(i, v, w)) out.push_back(w);
    return out;
  }
};

// Assigns each free variable a subset of the nodes.
struct Valuation {
  std::vector<std::vector<std::uint8_t>> sets;  // sets[l][v]

  Valuation() = default;
  Valuation(int m, int size) { sets.assign(m, std::vector<std::uint8_t>(size, 0)); }

  int var_count() const { return static_cast<int>(sets.size()); }
  bool contains(int l, int v) const { return sets[l][v] != 0; }
  void set(int l, int v, bool val = true) { sets[l][v] = val ? 1 : 0; }
};

// The generator color realized at a node: diagonal memberships plus variable
// memberships, as a mask compatible with form colors.
inline GenMask node_color(const Params& p, const AtomStructure& s,
                          const Valuation& e, int v) {
  GenMask c = s.diag[v] & ((p.n * p.n >= 64) ? ~GenMask{0}
                                             : ((GenMask{1} << (p.n * p.n)) - 1));
  for (int l = 0; l < p.m && l < e.var_count(); ++l)
    if (e.contains(l, v)) c |= p.var_bit(l);
  return c;
}

}  // namespace cyl
