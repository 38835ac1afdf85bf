#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyl/params.hpp"
#include "cyl/term.hpp"

namespace cyl {

// A normal form of degree k is a conjunction fixing the sign of every
// generator and, for k > 0, of c_i(s) for every direction i and every form s
// of degree k-1. Only the positive information is stored: the color (positive
// generators) and subs[i] (the forms whose i-cylindrification occurs
// positively). Everything else is implicitly negative; that cofinite part is
// never materialized.
//
// Forms are interned in a pool, so FormId equality is structural equality
// and sets of forms are ordered by id.

using FormId = std::uint32_t;

class FormPool {
 public:
  explicit FormPool(Params p) : params_(p) { p.require_valid(); }

  FormPool(const FormPool&) = delete;
  FormPool& operator=(const FormPool&) = delete;

  const Params& params() const { return params_; }

  FormId make_degree0(GenMask color) {
    return intern(0, color, std::vector<std::vector<FormId>>(params_.n));
  }

  // subs must have exactly n entries; members are sorted and deduplicated.
  FormId make(int degree, GenMask color, std::vector<std::vector<FormId>> subs) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (static_cast<int>(subs.size()) != params_.n)
      throw std::invalid_argument("subs must have one entry per direction");
    for (auto& s : subs) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (FormId g : s) {
        if (g >= size()) throw std::invalid_argument("unknown form id in subs");
        if (this->degree(g) != degree - 1)
          throw std::invalid_argument("subs member of wrong degree");
      }
      if (degree == 0 && !s.empty())
        throw std::invalid_argument("degree-0 form with nonempty subs");
    }
    if (color & ~params_.full_mask())
      throw std::invalid_argument("color has out-of-range generators");
    return intern(degree, color, std::move(subs));
  }

  int degree(FormId f) const { return rec(f).degree; }
  GenMask color(FormId f) const { return rec(f).color; }
  const std::vector<FormId>& subs(FormId f, int i) const { return rec(f).subs[i]; }
  const std::vector<std::vector<FormId>>& subs(FormId f) const { return rec(f).subs; }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return recs_.size();
  }

 private:
  struct Rec {
    int degree;
    GenMask color;
    std::vector<std::vector<FormId>> subs;
  };

  struct Key {
    int degree;
    GenMask color;
    const std::vector<std::vector<FormId>>* subs;
  };

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<int>{}(k.degree);
      auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      };
      mix(std::hash<GenMask>{}(k.color));
      for (const auto& s : *k.subs) {
        mix(s.size());
        for (FormId g : s) mix(g);
      }
      return h;
    }
  };

  struct KeyEq {
    bool operator()(const Key& a, const Key& b) const {
      return a.degree == b.degree && a.color == b.color && *a.subs == *b.subs;
    }
  };

  FormId intern(int degree, GenMask color, std::vector<std::vector<FormId>> subs) {
    std::lock_guard<std::mutex> lock(mu_);
    Key probe{degree, color, &subs};
    auto it = index_.find(probe);
    if (it != index_.end()) return it->second;
    FormId id = static_cast<FormId>(recs_.size());
    recs_.push_back(Rec{degree, color, std::move(subs)});
    index_.emplace(Key{degree, color, &recs_.back().subs}, id);
    return id;
  }

  const Rec& rec(FormId f) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (f >= recs_.size()) throw std::out_of_range("form id out of range");
    return recs_[f];
  }

  Params params_;
  // recs_ is a deque so interned records keep their address (the index keys
  // point into them).
  std::deque<Rec> recs_;
  std::unordered_map<Key, FormId, KeyHash, KeyEq> index_;
  mutable std::mutex mu_;
};

// All 2^(n*n+m) degree-0 forms, one per color subset, in mask order.
inline std::vector<FormId> enumerate_degree0(FormPool& pool,
                                             std::uint64_t budget = 1000000) {
  const Params& p = pool.params();
  const int gens = p.gen_count();
  if (gens >= 63 || (std::uint64_t{1} << gens) > budget)
    throw BudgetExceeded(
        "degree-0 enumeration needs 2^" + std::to_string(gens) +
            " forms, over budget " + std::to_string(budget),
        "2^" + std::to_string(gens));
  std::vector<FormId> out;
  out.reserve(std::size_t{1} << gens);
  for (GenMask mask = 0; mask < (GenMask{1} << gens); ++mask)
    out.push_back(pool.make_degree0(mask));
  return out;
}

// Distinct forms of equal degree denote disjoint elements, so structural
// inequality certifies f*g = 0.
inline bool disjoint(const FormPool& pool, FormId f, FormId g) {
  if (pool.degree(f) != pool.degree(g))
    throw DegreeMismatch("disjoint: degree mismatch");
  return f != g;
}

// The unique degree-h form above f: color is preserved, subs members are
// reduced recursively. Valid (as the unique upper form) whenever f is nonzero.
inline FormId reduce_degree(FormPool& pool, FormId f, int h) {
  if (h < 0 || h > pool.degree(f))
    throw std::out_of_range("reduce_degree: target degree out of range");
  if (h == pool.degree(f)) return f;
  std::unordered_map<std::uint64_t, FormId> memo;
  std::function<FormId(FormId, int)> go = [&](FormId g, int target) -> FormId {
    if (target == pool.degree(g)) return g;
    std::uint64_t key = (std::uint64_t{g} << 16) | static_cast<std::uint64_t>(target);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<FormId>> subs(pool.params().n);
    if (target > 0)
      for (int i = 0; i < pool.params().n; ++i)
        for (FormId s : pool.subs(g, i)) subs[i].push_back(go(s, target - 1));
    FormId r = pool.make(target, pool.color(g), std::move(subs));
    memo.emplace(key, r);
    return r;
  };
  return go(f, h);
}

// Diagnostic validation: bounds of color under the given params, degree
// coherence of the subs tree.
inline bool validate_form(const FormPool& pool, FormId f, const Params& p,
                          std::vector<std::string>* diagnostics = nullptr) {
  bool ok = true;
  auto report = [&](const std::string& msg) {
    ok = false;
    if (diagnostics) diagnostics->push_back(msg);
  };
  std::function<void(FormId)> go = [&](FormId g) {
    if (pool.color(g) & ~p.full_mask())
      report("form " + std::to_string(g) + ": color outside generator range");
    const int d = pool.degree(g);
    if (static_cast<int>(pool.subs(g).size()) != p.n) {
      report("form " + std::to_string(g) + ": wrong number of directions");
      return;
    }
    for (int i = 0; i < p.n; ++i)
      for (FormId s : pool.subs(g, i)) {
        if (pool.degree(s) != d - 1)
          report("form " + std::to_string(g) + ": subs[" + std::to_string(i) +
                 "] member of degree " + std::to_string(pool.degree(s)) +
                 ", expected " + std::to_string(d - 1));
        go(s);
      }
  };
  go(f);
  return ok;
}

// --- sizes of the form hierarchy -------------------------------------------
//
// |F_0| = 2^(n*n+m) and |F_{q+1}| = 2^(n*n+m) * 2^(n*|F_q|); already |F_1| is
// astronomically large, so sizes are carried symbolically with an exact value
// attached when it fits.

struct FormCount {
  std::optional<std::uint64_t> exact;
  std::string expr;
};

inline FormCount form_count(const Params& p, int degree) {
  const int gens = p.gen_count();
  FormCount c;
  c.expr = "2^" + std::to_string(gens);
  if (gens < 63) c.exact = std::uint64_t{1} << gens;
  for (int q = 0; q < degree; ++q) {
    // |F_{q+1}| = 2^gens * 2^(n*|F_q|)
    std::string inner;
    if (c.exact && *c.exact <= (std::uint64_t{1} << 56) / p.n)
      inner = std::to_string(p.n * *c.exact);
    else
      inner = "(" + std::to_string(p.n) + "*" + c.expr + ")";
    std::optional<std::uint64_t> next;
    if (c.exact && *c.exact > 0 &&
        *c.exact < std::uint64_t{63} &&
        p.n * *c.exact + gens < 63)
      next = std::uint64_t{1} << (p.n * *c.exact + gens);
    c.expr = "2^" + std::to_string(gens) + "*2^" + inner;
    c.exact = next;
  }
  return c;
}

// Unfolds the form into the literal conjunction, including every implicit
// negative conjunct -c_i(s) for s in F_{degree-1} \ subs[i]. Requires the
// full enumeration of F_{degree-1}, hence the budget gate.
inline TermPtr form_to_term(FormPool& pool, FormId f,
                            std::uint64_t budget = 1000000) {
  const Params& p = pool.params();
  const int deg = pool.degree(f);
  if (deg >= 2) {
    // The negative part would range over F_{deg-1}, which is never
    // enumerable beyond degree 0.
    FormCount cnt = form_count(p, deg - 1);
    throw BudgetExceeded("form_to_term: F_" + std::to_string(deg - 1) +
                             " has " + cnt.expr + " members",
                         cnt.expr);
  }
  std::vector<FormId> lower;
  if (deg == 1) {
    FormCount c0 = form_count(p, 0);
    if (!c0.exact || *c0.exact > budget)
      throw BudgetExceeded("form_to_term needs all " + c0.expr +
                               " degree-0 forms, over budget " +
                               std::to_string(budget),
                           c0.expr);
    lower = enumerate_degree0(pool, budget);
  }

  TermPtr acc;
  auto add = [&acc](TermPtr t) {
    acc = acc ? t_and(std::move(acc), std::move(t)) : std::move(t);
  };
  for (int g = 0; g < p.gen_count(); ++g) {
    TermPtr lit = p.is_diag(g) ? t_diag(p.diag_i(g), p.diag_j(g))
                               : t_var(p.var_l(g));
    add(has_bit(pool.color(f), g) ? lit : t_neg(lit));
  }
  for (int i = 0; i < p.n && deg > 0; ++i) {
    const auto& pos = pool.subs(f, i);
    for (FormId s : lower) {
      TermPtr body = form_to_term(pool, s, budget);
      TermPtr lit = t_cyl(i, std::move(body));
      bool positive = std::binary_search(pos.begin(), pos.end(), s);
      add(positive ? lit : t_neg(lit));
    }
  }
  return acc;
}

// Human-readable one-line rendering, e.g. "<{d_0_0,d_1_1} | [f3 f7] [f3]>".
inline std::string form_to_string(const FormPool& pool, FormId f) {
  const Params& p = pool.params();
  std::ostringstream os;
  os << "<{";
  bool first = true;
  for (int g = 0; g < p.gen_count(); ++g)
    if (has_bit(pool.color(f), g)) {
      if (!first) os << ",";
      os << gen_name(p, g);
      first = false;
    }
  os << "}";
  if (pool.degree(f) > 0) {
    for (int i = 0; i < p.n; ++i) {
      os << " | [";
      bool f2 = true;
      for (FormId s : pool.subs(f, i)) {
        if (!f2) os << " ";
        os << "f" << s;
        f2 = false;
      }
      os << "]";
    }
  }
  os << ">";
  return os.str();
}

}  // namespace cyl
