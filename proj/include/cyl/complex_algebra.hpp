#pragma once

#include <cstdint>
#include <vector>

#include "cyl/axioms.hpp"
#include "cyl/structure.hpp"
#include "cyl/term.hpp"

namespace cyl {

// The complex algebra over an atom structure: carrier = all subsets of S
// (as bitmasks), Boolean set operations, T_i* as the operator and E_ij as
// constants. Explicit tables are kept small; the carrier has 2^|S| elements.
class FiniteAlgebra {
 public:
  using Elem = std::uint32_t;
  static constexpr int kMaxNodes = 16;

  explicit FiniteAlgebra(const AtomStructure& s, int max_nodes = kMaxNodes) {
    if (s.size() > max_nodes)
      throw std::invalid_argument(
          "complex algebra limited to " + std::to_string(max_nodes) +
          " atoms, got " + std::to_string(s.size()));
    n_ = s.n;
    size_ = s.size();
    full_ = size_ >= 32 ? ~Elem{0} : ((Elem{1} << size_) - 1);
    rows_.assign(n_, std::vector<Elem>(size_, 0));
    for (int i = 0; i < n_; ++i)
      for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
          if (s.in_t(i, a, b)) rows_[i][a] |= Elem{1} << b;
    diag_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int v = 0; v < size_; ++v)
          if (s.in_e(i, j, v)) diag_[i * n_ + j] |= Elem{1} << v;
  }

  int atom_count() const { return size_; }
  std::uint64_t carrier_size() const { return std::uint64_t{1} << size_; }
  Elem unit() const { return full_; }
  Elem diag(int i, int j) const { return diag_[i * n_ + j]; }

  Elem cyl(int i, Elem x) const {
    Elem out = 0;
    for (int v = 0; v < size_; ++v)
      if ((x >> v) & 1) out |= rows_[i][v];
    return out;
  }

  // Evaluates a term; vars[l] supplies the value of x_l.
  Elem eval(const TermPtr& t, const std::vector<Elem>& vars) const {
    switch (t->kind) {
      case Term::Kind::zero: return 0;
      case Term::Kind::one:  return full_;
      case Term::Kind::diag: return diag(t->a, t->b);
      case Term::Kind::var:  return vars.at(t->a);
      case Term::Kind::neg:  return full_ & ~eval(t->lhs, vars);
      case Term::Kind::cyl:  return cyl(t->a, eval(t->lhs, vars));
      case Term::Kind::conj: return eval(t->lhs, vars) & eval(t->rhs, vars);
      case Term::Kind::disj: return eval(t->lhs, vars) | eval(t->rhs, vars);
    }
    return 0;
  }

 private:
  int n_ = 0, size_ = 0;
  Elem full_ = 0;
  std::vector<std::vector<Elem>> rows_;  // rows_[i][v] = T_i-neighborhood mask
  std::vector<Elem> diag_;
};

inline FiniteAlgebra complex_algebra(const AtomStructure& s,
                                     int max_nodes = FiniteAlgebra::kMaxNodes) {
  return FiniteAlgebra(s, max_nodes);
}

// Brute-force check: the equation holds under every assignment of carrier
// elements to its equation variables. (2^|S|)^var_count assignments.
inline bool check_equation(const FiniteAlgebra& a, const Equation& eq,
                           std::uint64_t budget = 1u << 24) {
  std::uint64_t total = 1;
  for (int v = 0; v < eq.var_count; ++v) {
    if (total > budget / a.carrier_size() + 1) break;
    total *= a.carrier_size();
  }
  if (total > budget)
    throw BudgetExceeded("equation check needs " + std::to_string(total) +
                             " assignments, over budget " +
                             std::to_string(budget),
                         std::to_string(total));
  std::vector<FiniteAlgebra::Elem> vars(std::max(eq.var_count, 1), 0);
  std::uint64_t combos = 1;
  for (int v = 0; v < eq.var_count; ++v) combos *= a.carrier_size();
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::uint64_t rest = idx;
    for (int v = 0; v < eq.var_count; ++v) {
      vars[v] = static_cast<FiniteAlgebra::Elem>(rest % a.carrier_size());
      rest /= a.carrier_size();
    }
    if (a.eval(eq.lhs, vars) != a.eval(eq.rhs, vars)) return false;
  }
  return true;
}

}  // namespace cyl
