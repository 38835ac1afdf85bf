#pragma once

#include <string>
#include <vector>

#include "cyl/normal_form.hpp"
#include "cyl/term.hpp"
#include "cyl/witness.hpp"

namespace cyl {

// A finite set of normal forms of one common degree; the value it denotes is
// the disjunction of its members.
struct FormSet {
  int degree = 0;
  std::vector<FormId> members;  // sorted, distinct
};

// Decides whether f <= t holds in every Boolean algebra with operators of
// this type, for depth(t) <= degree(f). Generators read off the color,
// Boolean connectives evaluate componentwise, and f <= c_i(s) holds exactly
// when some positive member of subs[i] satisfies s — the cofinite negative
// part of the form settles the complementary case.
inline bool eval_on_form(FormPool& pool, const TermPtr& t, FormId f) {
  const Params& p = pool.params();
  if (depth(t) > pool.degree(f))
    throw DegreeMismatch("eval_on_form: term depth " + std::to_string(depth(t)) +
                         " exceeds form degree " + std::to_string(pool.degree(f)));
  switch (t->kind) {
    case Term::Kind::zero: return false;
    case Term::Kind::one:  return true;
    case Term::Kind::diag: return has_bit(pool.color(f), p.diag_index(t->a, t->b));
    case Term::Kind::var:  return has_bit(pool.color(f), p.var_index(t->a));
    case Term::Kind::neg:  return !eval_on_form(pool, t->lhs, f);
    case Term::Kind::conj: return eval_on_form(pool, t->lhs, f) && eval_on_form(pool, t->rhs, f);
    case Term::Kind::disj: return eval_on_form(pool, t->lhs, f) || eval_on_form(pool, t->rhs, f);
    case Term::Kind::cyl: {
      for (FormId g : pool.subs(f, t->a))
        if (eval_on_form(pool, t->lhs, g)) return true;
      return false;
    }
  }
  return false;
}

// Rewrites a term as the set of degree-q forms below it, q = depth(t).
// Only degree 0 is enumerable; anything deeper fails loudly with the exact
// blowup size.
inline FormSet rewrite(FormPool& pool, const TermPtr& t,
                       std::uint64_t budget = 1000000) {
  const Params& p = pool.params();
  if (!indices_in_bounds(t, p))
    throw std::invalid_argument("rewrite: term indices out of bounds");
  const int q = depth(t);
  FormCount cnt = form_count(p, q);
  if (q >= 1 || !cnt.exact || *cnt.exact > budget)
    throw BudgetExceeded("rewrite: |F_" + std::to_string(q) + "| = " + cnt.expr +
                             " exceeds budget " + std::to_string(budget),
                         cnt.expr);
  FormSet out;
  out.degree = q;
  for (FormId f : enumerate_degree0(pool, budget))
    if (eval_on_form(pool, t, f)) out.members.push_back(f);
  return out;
}

// K |= t = 0 iff every disjunct of the rewritten form set is unsatisfiable.
inline bool decide_zero(FormPool& pool, const FormSet& fs) {
  for (FormId f : fs.members)
    if (pool.degree(f) != fs.degree)
      throw DegreeMismatch("decide_zero: mixed degrees in form set");
  for (FormId f : fs.members)
    if (is_satisfiable(pool, f)) return false;
  return true;
}

inline bool decide_zero(FormPool& pool, const TermPtr& t,
                        std::uint64_t budget = 1000000) {
  return decide_zero(pool, rewrite(pool, t, budget));
}

// K |= t1 = t2 iff the symmetric difference rewrites to zero.
inline bool decide_equation(FormPool& pool, const TermPtr& t1, const TermPtr& t2,
                            std::uint64_t budget = 1000000) {
  TermPtr sym_diff = t_or(t_and(t1, t_neg(t2)), t_and(t_neg(t1), t2));
  return decide_zero(pool, sym_diff, budget);
}

}  // namespace cyl
