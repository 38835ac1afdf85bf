#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cyl/structure.hpp"

namespace cyl {

// Frame conditions characterizing membership of the complex algebra in the
// target class:
//
//   AS1  every T_i is an equivalence relation
//   AS2  E_ii = S
//   AS3  E_ij = T_k*(E_ik & E_kj)   for k not in {i,j}     (nca)
//   AS4  E_ij = E_ji, E_ik & E_kj <= E_ij, E_ij = T_k* E_ij,
//        the latter two for k not in {i,j}, the symmetry clause whenever
//        some such k exists                                 (wca)
//   AS5  T_i & E_ij^2 <= Id        for i != j
//
// Cm(S) is in NCA_n iff AS1, AS2, AS3, AS5 hold, and in WCA_n iff
// AS1, AS2, AS4, AS5 hold. The index constraint on AS4 mirrors the WC6
// schema's quantification (k outside {i,j} read as a set); the axiom/frame
// equivalence test adjudicates this reading.

struct ConditionEntry {
  std::string id;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct ConditionReport {
  std::vector<ConditionEntry> entries;
  bool all_pass = true;

  void add(const std::string& id, bool pass, const std::string& cex = "") {
    entries.push_back({id, pass, cex});
    if (!pass) all_pass = false;
  }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << (e.pass ? "pass " : "FAIL ") << e.id;
      if (!e.pass && !e.counterexample.empty()) os << ": " << e.counterexample;
      os << "\n";
    }
    return os.str();
  }

  // First failing entry, or empty string.
  std::string first_failure() const {
    for (const auto& e : entries)
      if (!e.pass)
        return e.id + (e.counterexample.empty() ? "" : " (" + e.counterexample + ")");
    return "";
  }
};

namespace detail {

inline std::string node_pair(const AtomStructure& s, int a, int b) {
  return "(" + s.names[a] + "," + s.names[b] + ")";
}

}  // namespace detail

inline ConditionReport check_conditions(const AtomStructure& s, Variant variant) {
  ConditionReport rep;
  const int n = s.n;
  const int sz = s.size();

  // AS1: reflexive, symmetric, transitive.
  for (int i = 0; i < n; ++i) {
    bool pass = true;
    std::string cex;
    for (int a = 0; a < sz && pass; ++a)
      if (!s.in_t(i, a, a)) {
        pass = false;
        cex = "not reflexive at " + s.names[a];
      }
    for (int a = 0; a < sz && pass; ++a)
      for (int b = 0; b < sz && pass; ++b)
        if (s.in_t(i, a, b) && !s.in_t(i, b, a)) {
          pass = false;
          cex = "not symmetric at " + detail::node_pair(s, a, b);
        }
    for (int a = 0; a < sz && pass; ++a)
      for (int b = 0; b < sz && pass; ++b) {
        if (!s.in_t(i, a, b)) continue;
        for (int c = 0; c < sz && pass; ++c)
          if (s.in_t(i, b, c) && !s.in_t(i, a, c)) {
            pass = false;
            cex = "not transitive via " + s.names[a] + "," + s.names[b] + "," +
                  s.names[c];
          }
      }
    rep.add("AS1[T" + std::to_string(i) + " equivalence]", pass, cex);
  }

  // AS2: E_ii = S.
  for (int i = 0; i < n; ++i) {
    bool pass = true;
    std::string cex;
    for (int v = 0; v < sz && pass; ++v)
      if (!s.in_e(i, i, v)) {
        pass = false;
        cex = s.names[v] + " missing from E_" + std::to_string(i) + "_" +
              std::to_string(i);
      }
    rep.add("AS2[E" + std::to_string(i) + std::to_string(i) + "=S]", pass, cex);
  }

  auto tk_image_contains = [&](int k, int v, auto member) {
    // v in T_k*(X) iff some x with member(x) has (x,v) in T_k
    for (int x = 0; x < sz; ++x)
      if (member(x) && s.in_t(k, x, v)) return true;
    return false;
  };

  if (variant == Variant::nca) {
    // AS3: E_ij = T_k*(E_ik & E_kj), k not in {i,j}.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          bool pass = true;
          std::string cex;
          for (int v = 0; v < sz && pass; ++v) {
            bool lhs = s.in_e(i, j, v);
            bool rhs = tk_image_contains(k, v, [&](int x) {
              return s.in_e(i, k, x) && s.in_e(k, j, x);
            });
            if (lhs != rhs) {
              pass = false;
              cex = s.names[v] + (lhs ? " has no T_k witness" : " gains E_ij");
            }
          }
          rep.add("AS3[" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "]",
                  pass, cex);
        }
  } else {
    // AS4, constrained reading.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool some_k = false;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) some_k = true;
        if (!some_k) continue;
        {
          bool pass = true;
          std::string cex;
          for (int v = 0; v < sz && pass; ++v)
            if (s.in_e(i, j, v) != s.in_e(j, i, v)) {
              pass = false;
              cex = s.names[v];
            }
          rep.add("AS4.sym[" + std::to_string(i) + "," + std::to_string(j) + "]",
                  pass, cex);
        }
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          bool pass = true;
          std::string cex;
          for (int v = 0; v < sz && pass; ++v)
            if (s.in_e(i, k, v) && s.in_e(k, j, v) && !s.in_e(i, j, v)) {
              pass = false;
              cex = s.names[v];
            }
          rep.add("AS4.le[" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "]",
                  pass, cex);
          pass = true;
          cex.clear();
          for (int v = 0; v < sz && pass; ++v) {
            bool lhs = s.in_e(i, j, v);
            bool rhs =
                tk_image_contains(k, v, [&](int x) { return s.in_e(i, j, x); });
            if (lhs != rhs) {
              pass = false;
              cex = s.names[v];
            }
          }
          rep.add("AS4.cyl[" + std::to_string(i) + "," + std::to_string(j) +
                      "," + std::to_string(k) + "]",
                  pass, cex);
        }
      }
  }

  // AS5: T_i & E_ij^2 <= Id, i != j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool pass = true;
      std::string cex;
      for (int a = 0; a < sz && pass; ++a)
        for (int b = 0; b < sz && pass; ++b)
          if (a != b && s.in_t(i, a, b) && s.in_e(i, j, a) && s.in_e(i, j, b)) {
            pass = false;
            cex = detail::node_pair(s, a, b) + " both in E_" +
                  std::to_string(i) + "_" + std::to_string(j);
          }
      rep.add("AS5[" + std::to_string(i) + "," + std::to_string(j) + "]", pass,
              cex);
    }

  return rep;
}

}  // namespace cyl
