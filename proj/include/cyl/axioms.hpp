#pragma once

#include <string>
#include <vector>

#include "cyl/params.hpp"
#include "cyl/term.hpp"

namespace cyl {

// An equation between two terms. Variables x_0 .. x_{var_count-1} occurring
// in the terms are equation variables: the equation holds in an algebra when
// it holds under every assignment of algebra elements to them.
struct Equation {
  std::string name;
  TermPtr lhs, rhs;
  int var_count = 0;
};

inline std::string to_string(const Equation& eq) {
  return eq.name + ": " + to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

// Ground instances of the defining equations for the chosen variant.
//
//   C0  Boolean algebra axioms
//   C1  c_i 0 = 0
//   C2  x <= c_i x
//   C3  c_i(x * c_i y) = c_i x * c_i y
//   C5  d_ii = 1
//   C6  d_ij = c_k(d_ik * d_kj)            k not in {i,j}   (nca only)
//   WC6 d_ik*d_kj <= d_ij, d_ij = d_ji, d_ji = c_k d_ji,
//                                          k not in {i,j}   (wca only)
//   C7  c_i(d_ij * x) * c_i(d_ij * -x) = 0,  i != j
//
// Commutativity of cylindrifications (C4) is deliberately absent from both
// variants. The index constraint "k not in {i,j}" reads {i,j} as a set, so
// i = j admits every k != i.
inline std::vector<Equation> instantiate_axioms(const Params& p) {
  p.require_valid();
  std::vector<Equation> out;
  const int n = p.n;
  auto x = t_var(0);
  auto y = t_var(1);
  auto z = t_var(2);

  // C0: a complete equational basis for Boolean algebras.
  out.push_back({"C0.comm+", t_or(x, y), t_or(y, x), 2});
  out.push_back({"C0.comm*", t_and(x, y), t_and(y, x), 2});
  out.push_back({"C0.assoc+", t_or(x, t_or(y, z)), t_or(t_or(x, y), z), 3});
  out.push_back({"C0.assoc*", t_and(x, t_and(y, z)), t_and(t_and(x, y), z), 3});
  out.push_back({"C0.distr*", t_and(x, t_or(y, z)), t_or(t_and(x, y), t_and(x, z)), 3});
  out.push_back({"C0.distr+", t_or(x, t_and(y, z)), t_and(t_or(x, y), t_or(x, z)), 3});
  out.push_back({"C0.unit+", t_or(x, t_zero()), x, 1});
  out.push_back({"C0.unit*", t_and(x, t_one()), x, 1});
  out.push_back({"C0.compl+", t_or(x, t_neg(x)), t_one(), 1});
  out.push_back({"C0.compl*", t_and(x, t_neg(x)), t_zero(), 1});

  auto idx = [](int i) { return std::to_string(i); };

  for (int i = 0; i < n; ++i) {
    out.push_back({"C1[" + idx(i) + "]", t_cyl(i, t_zero()), t_zero(), 0});
    // x <= c_i x  as  x + c_i x = c_i x
    out.push_back({"C2[" + idx(i) + "]", t_or(x, t_cyl(i, x)), t_cyl(i, x), 1});
    out.push_back({"C3[" + idx(i) + "]",
                   t_cyl(i, t_and(x, t_cyl(i, y))),
                   t_and(t_cyl(i, x), t_cyl(i, y)), 2});
    out.push_back({"C5[" + idx(i) + "]", t_diag(i, i), t_one(), 0});
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        std::string suffix =
            "[" + idx(i) + "," + idx(j) + "," + idx(k) + "]";
        if (p.variant == Variant::nca) {
          out.push_back({"C6" + suffix, t_diag(i, j),
                         t_cyl(k, t_and(t_diag(i, k), t_diag(k, j))), 0});
        } else {
          auto prod = t_and(t_diag(i, k), t_diag(k, j));
          out.push_back({"WC6.le" + suffix, t_or(prod, t_diag(i, j)),
                         t_diag(i, j), 0});
          out.push_back({"WC6.sym" + suffix, t_diag(i, j), t_diag(j, i), 0});
          out.push_back({"WC6.cyl" + suffix, t_diag(j, i),
                         t_cyl(k, t_diag(j, i)), 0});
        }
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back({"C7[" + idx(i) + "," + idx(j) + "]",
                     t_and(t_cyl(i, t_and(t_diag(i, j), x)),
                           t_cyl(i, t_and(t_diag(i, j), t_neg(x)))),
                     t_zero(), 1});
    }

  return out;
}

}  // namespace cyl
