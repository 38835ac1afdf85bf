#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyl {

// The two equational classes handled by this toolkit: cylindric-type
// algebras without commutativity of cylindrifications (nca), and the
// further weakening that replaces the diagonal axiom C6 by WC6 (wca).
enum class Variant { nca, wca };

inline const char* to_string(Variant v) {
  return v == Variant::nca ? "nca" : "wca";
}

inline Variant variant_from_string(const std::string& s) {
  if (s == "nca" || s == "NCA") return Variant::nca;
  if (s == "wca" || s == "WCA") return Variant::wca;
  throw std::invalid_argument("unknown variant: " + s);
}

// Generators (diagonal constants and free variables) are indexed into a
// single bitmask: d_ij at i*n+j, x_l at n*n+l.
using GenMask = std::uint64_t;

struct Params {
  int n = 2;  // dimension, >= 2
  int m = 0;  // number of free variables, >= 0
  Variant variant = Variant::wca;

  int gen_count() const { return n * n + m; }

  // The 64-bit generator mask caps n*n + m; far beyond desk scale anyway.
  bool valid() const { return n >= 2 && m >= 0 && gen_count() <= 62; }

  void require_valid() const {
    if (!valid())
      throw std::invalid_argument(
          "invalid parameters: need n >= 2, m >= 0, n*n + m <= 62");
  }

  int diag_index(int i, int j) const { return i * n + j; }
  int var_index(int l) const { return n * n + l; }

  bool is_diag(int g) const { return g < n * n; }
  int diag_i(int g) const { return g / n; }
  int diag_j(int g) const { return g % n; }
  int var_l(int g) const { return g - n * n; }

  GenMask diag_bit(int i, int j) const {
    return GenMask{1} << diag_index(i, j);
  }
  GenMask var_bit(int l) const { return GenMask{1} << var_index(l); }
  GenMask full_mask() const {
    return (GenMask{1} << gen_count()) - 1;
  }
};

inline bool has_bit(GenMask m, int idx) { return (m >> idx) & 1; }

// Canonical generator names, also used in the form file format:
// "d_i_j" for diagonals, "x_l" for variables.
inline std::string gen_name(const Params& p, int g) {
  if (p.is_diag(g))
    return "d_" + std::to_string(p.diag_i(g)) + "_" + std::to_string(p.diag_j(g));
  return "x_" + std::to_string(p.var_l(g));
}

// Parses a generator name back to its index; throws on malformed names or
// out-of-range indices.
inline int gen_from_name(const Params& p, const std::string& name) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("bad generator name: " + name);
  };
  if (name.size() < 3) throw bad();
  if (name[0] == 'd') {
    auto sep = name.find('_', 2);
    if (name[1] != '_' || sep == std::string::npos) throw bad();
    int i = 0, j = 0;
    try {
      i = std::stoi(name.substr(2, sep - 2));
      j = std::stoi(name.substr(sep + 1));
    } catch (...) {
      throw bad();
    }
    if (i < 0 || i >= p.n || j < 0 || j >= p.n)
      throw std::runtime_error("diagonal index out of range: " + name);
    return p.diag_index(i, j);
  }
  if (name[0] == 'x' && name[1] == '_') {
    int l = 0;
    try {
      l = std::stoi(name.substr(2));
    } catch (...) {
      throw bad();
    }
    if (l < 0 || l >= p.m)
      throw std::runtime_error("variable index out of range: " + name);
    return p.var_index(l);
  }
  throw bad();
}

// Errors shared across modules.

struct BudgetExceeded : std::runtime_error {
  std::string size_expr;  // symbolic size that blew the budget, e.g. "2^5*2^64"
  BudgetExceeded(const std::string& what, std::string expr)
      : std::runtime_error(what), size_expr(std::move(expr)) {}
};

struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyl
