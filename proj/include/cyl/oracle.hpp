#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cyl/complex_algebra.hpp"
#include "cyl/conditions.hpp"
#include "cyl/point_form.hpp"
#include "cyl/structure.hpp"

namespace cyl {

// Exhaustive search over small atom structures: the ground truth the decision
// procedure is compared against. T_i range over set partitions (so the
// equivalence condition holds by construction), diagonal sets over all
// subsets with E_ii = S forced, and only condition-passing structures are
// yielded. Enumeration is up to node renaming only; duplicates are possible
// and harmless, omissions are not.

struct SearchSpace {
  Params p;
  int max_nodes = 3;
  std::uint64_t step_budget = 200000000;  // structures examined before giving up
};

// Report-free fast path of check_conditions, for the inner loop.
inline bool conditions_hold(const AtomStructure& s, Variant variant) {
  const int n = s.n;
  const int sz = s.size();
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < sz; ++a)
      if (!s.in_t(i, a, a)) return false;
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) {
        if (!s.in_t(i, a, b)) continue;
        if (!s.in_t(i, b, a)) return false;
        for (int c = 0; c < sz; ++c)
          if (s.in_t(i, b, c) && !s.in_t(i, a, c)) return false;
      }
  }
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < sz; ++v)
      if (!s.in_e(i, i, v)) return false;
  if (variant == Variant::nca) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          for (int v = 0; v < sz; ++v) {
            bool rhs = false;
            for (int x = 0; x < sz && !rhs; ++x)
              if (s.in_e(i, k, x) && s.in_e(k, j, x) && s.in_t(k, x, v))
                rhs = true;
            if (s.in_e(i, j, v) != rhs) return false;
          }
        }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool some_k = false;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) some_k = true;
        if (!some_k) continue;
        for (int v = 0; v < sz; ++v)
          if (s.in_e(i, j, v) != s.in_e(j, i, v)) return false;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          for (int v = 0; v < sz; ++v) {
            if (s.in_e(i, k, v) && s.in_e(k, j, v) && !s.in_e(i, j, v))
              return false;
            bool rhs = false;
            for (int x = 0; x < sz && !rhs; ++x)
              if (s.in_e(i, j, x) && s.in_t(k, x, v)) rhs = true;
            if (s.in_e(i, j, v) != rhs) return false;
          }
        }
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
          if (a != b && s.in_t(i, a, b) && s.in_e(i, j, a) && s.in_e(i, j, b))
            return false;
    }
  return true;
}

namespace detail {

// All set partitions of {0..sz-1} as block-id vectors, in restricted-growth
// order (canonical under renaming).
inline std::vector<std::vector<int>> all_partitions(int sz) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(sz, 0);
  std::function<void(int, int)> go = [&](int pos, int max_block) {
    if (pos == sz) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[pos] = b;
      go(pos + 1, std::max(max_block, b));
    }
  };
  go(0, -1);
  return out;
}

}  // namespace detail

// Calls fn for every condition-passing structure with at most max_nodes
// nodes; fn returning true stops the walk. Returns the number of candidate
// structures examined.
template <typename Fn>
std::uint64_t for_each_valid_structure(const SearchSpace& sp, Fn&& fn) {
  sp.p.require_valid();
  const int n = sp.p.n;
  std::uint64_t steps = 0;
  for (int sz = 1; sz <= sp.max_nodes; ++sz) {
    auto partitions = detail::all_partitions(sz);
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) offdiag.emplace_back(i, j);

    std::vector<std::size_t> pidx(n, 0);
    for (;;) {
      AtomStructure base(n, sz);
      for (int i = 0; i < n; ++i) {
        const auto& block = partitions[pidx[i]];
        for (int a = 0; a < sz; ++a)
          for (int b = 0; b < sz; ++b)
            if (block[a] == block[b]) base.set_t(i, a, b);
      }
      for (int i = 0; i < n; ++i)
        for (int v = 0; v < sz; ++v) base.set_e(i, i, v);

      const std::uint64_t e_combos = std::uint64_t{1}
                                     << (offdiag.size() * sz);
      for (std::uint64_t mask = 0; mask < e_combos; ++mask) {
        if (++steps > sp.step_budget)
          throw BudgetExceeded(
              "structure enumeration exceeded step budget after " +
                  std::to_string(steps - 1) + " candidates",
              std::to_string(steps));
        AtomStructure s = base;
        std::uint64_t rest = mask;
        for (const auto& [i, j] : offdiag) {
          for (int v = 0; v < sz; ++v)
            if ((rest >> v) & 1) s.set_e(i, j, v);
          rest >>= sz;
        }
        if (!conditions_hold(s, sp.p.variant)) continue;
        if (fn(static_cast<const AtomStructure&>(s))) return steps;
      }

      int pos = n - 1;
      while (pos >= 0 && ++pidx[pos] == partitions.size()) pidx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return steps;
}

// A model found by the search: structure, valuation, and the node realizing
// the form.
struct OracleWitness {
  AtomStructure structure;
  Valuation valuation;
  int node = 0;
};

// Satisfiability by exhaustive search: some valid structure within the
// bound, some valuation, and some node jointly model the form. A negative
// answer only rules out witnesses up to max_nodes; completeness needs the
// bound to dominate the witness size for the query.
inline std::optional<OracleWitness> oracle_find(FormPool& pool, FormId f,
                                                const SearchSpace& sp) {
  const Params& p = pool.params();
  const int deg = pool.degree(f);
  std::optional<OracleWitness> found;
  GenMask diag_part = pool.color(f) & ((GenMask{1} << (p.n * p.n)) - 1);
  GenMask var_part = pool.color(f) >> (p.n * p.n);

  for_each_valid_structure(sp, [&](const AtomStructure& s) {
    if (deg == 0) {
      // A valuation can put any node in any variable set independently, so a
      // node qualifies exactly when its diagonal pattern matches.
      for (int v = 0; v < s.size(); ++v)
        if (s.diag[v] == diag_part) {
          Valuation e(p.m, s.size());
          for (int l = 0; l < p.m; ++l)
            if ((var_part >> l) & 1) e.set(l, v);
          found = OracleWitness{s, e, v};
          return true;
        }
      return false;
    }
    const std::uint64_t val_combos = std::uint64_t{1} << (p.m * s.size());
    for (std::uint64_t vm = 0; vm < val_combos; ++vm) {
      Valuation e(p.m, s.size());
      std::uint64_t rest = vm;
      for (int l = 0; l < p.m; ++l) {
        for (int v = 0; v < s.size(); ++v)
          if ((rest >> v) & 1) e.set(l, v);
        rest >>= s.size();
      }
      PointFormCache cache(s, e, pool);
      for (int v = 0; v < s.size(); ++v)
        if (cache.at(v, deg) == f) {
          found = OracleWitness{s, e, v};
          return true;
        }
    }
    return false;
  });
  return found;
}

inline bool oracle_satisfiable(FormPool& pool, FormId f, const SearchSpace& sp) {
  return oracle_find(pool, f, sp).has_value();
}

// All degree-0 colors realized somewhere within the bound, in one sweep.
// The diagonal part is read off the nodes; the variable part is free, since
// a valuation can put any node into any variable set independently.
inline std::set<GenMask> realizable_degree0_colors(const SearchSpace& sp) {
  const Params& p = sp.p;
  std::set<GenMask> diag_colors;
  for_each_valid_structure(sp, [&](const AtomStructure& s) {
    for (int v = 0; v < s.size(); ++v) diag_colors.insert(s.diag[v]);
    return false;
  });
  std::set<GenMask> out;
  for (GenMask d : diag_colors)
    for (GenMask xs = 0; xs < (GenMask{1} << p.m); ++xs)
      out.insert(d | (xs << (p.n * p.n)));
  return out;
}

// Hunts for a structure refuting commutativity of cylindrifications: valid
// for the variant, but c_0 c_1 X != c_1 c_0 X for some subset X. Such
// structures exist with three nodes; finding one certifies that C4 is not a
// consequence of the variant's axioms.
struct CommutativityRefutation {
  AtomStructure structure;
  std::uint32_t subset = 0;  // the separating X, as a node mask
};

inline std::optional<CommutativityRefutation> find_commutativity_refutation(
    const SearchSpace& sp) {
  std::optional<CommutativityRefutation> out;
  for_each_valid_structure(sp, [&](const AtomStructure& s) {
    FiniteAlgebra a(s);
    for (std::uint32_t x = 0; x < a.carrier_size(); ++x) {
      if (a.cyl(0, a.cyl(1, x)) != a.cyl(1, a.cyl(0, x))) {
        out = CommutativityRefutation{s, x};
        return true;
      }
    }
    return false;
  });
  return out;
}

}  // namespace cyl
