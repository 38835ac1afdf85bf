#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyl/params.hpp"

namespace cyl {

// Terms over the signature {0, 1, d_ij, x_l, -, c_i, *, +}.
// Immutable; shared subterms are fine.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { zero, one, diag, var, neg, cyl, conj, disj };

  Kind kind;
  int a = 0, b = 0;  // diag: (i, j); var: (l); cyl: (i)
  TermPtr lhs, rhs;  // neg/cyl use lhs only

  Term(Kind k, int a_, int b_, TermPtr l, TermPtr r)
      : kind(k), a(a_), b(b_), lhs(std::move(l)), rhs(std::move(r)) {}
};

inline TermPtr t_zero() { return std::make_shared<Term>(Term::Kind::zero, 0, 0, nullptr, nullptr); }
inline TermPtr t_one() { return std::make_shared<Term>(Term::Kind::one, 0, 0, nullptr, nullptr); }
inline TermPtr t_diag(int i, int j) { return std::make_shared<Term>(Term::Kind::diag, i, j, nullptr, nullptr); }
inline TermPtr t_var(int l) { return std::make_shared<Term>(Term::Kind::var, l, 0, nullptr, nullptr); }
inline TermPtr t_neg(TermPtr t) { return std::make_shared<Term>(Term::Kind::neg, 0, 0, std::move(t), nullptr); }
inline TermPtr t_cyl(int i, TermPtr t) { return std::make_shared<Term>(Term::Kind::cyl, i, 0, std::move(t), nullptr); }
inline TermPtr t_and(TermPtr l, TermPtr r) { return std::make_shared<Term>(Term::Kind::conj, 0, 0, std::move(l), std::move(r)); }
inline TermPtr t_or(TermPtr l, TermPtr r) { return std::make_shared<Term>(Term::Kind::disj, 0, 0, std::move(l), std::move(r)); }

inline bool term_equal(const TermPtr& s, const TermPtr& t) {
  if (s == t) return true;
  if (!s || !t) return false;
  if (s->kind != t->kind || s->a != t->a || s->b != t->b) return false;
  return term_equal(s->lhs, t->lhs) && term_equal(s->rhs, t->rhs);
}

// Cylindrification nesting depth; Boolean connectives do not add to it.
inline int depth(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::zero:
    case Term::Kind::one:
    case Term::Kind::diag:
    case Term::Kind::var:
      return 0;
    case Term::Kind::neg:
      return depth(t->lhs);
    case Term::Kind::cyl:
      return depth(t->lhs) + 1;
    case Term::Kind::conj:
    case Term::Kind::disj:
      return std::max(depth(t->lhs), depth(t->rhs));
  }
  return 0;
}

// Checks that all diagonal/cylindrification indices are < n and variable
// indices are < m.
inline bool indices_in_bounds(const TermPtr& t, const Params& p) {
  switch (t->kind) {
    case Term::Kind::zero:
    case Term::Kind::one:
      return true;
    case Term::Kind::diag:
      return t->a >= 0 && t->a < p.n && t->b >= 0 && t->b < p.n;
    case Term::Kind::var:
      return t->a >= 0 && t->a < p.m;
    case Term::Kind::neg:
      return indices_in_bounds(t->lhs, p);
    case Term::Kind::cyl:
      return t->a >= 0 && t->a < p.n && indices_in_bounds(t->lhs, p);
    case Term::Kind::conj:
    case Term::Kind::disj:
      return indices_in_bounds(t->lhs, p) && indices_in_bounds(t->rhs, p);
  }
  return false;
}

// --- printing -------------------------------------------------------------
//
// Grammar (whitespace-separated tokens):
//   term := '0' | '1' | 'd' INT INT | 'x' INT | '-' term
//         | 'c' INT '(' term ')' | term '*' term | term '+' term | '(' term ')'
// Precedence '-' > '*' > '+', binary operators left-associative.

namespace detail {

inline int prec(Term::Kind k) {
  switch (k) {
    case Term::Kind::disj: return 1;
    case Term::Kind::conj: return 2;
    case Term::Kind::neg:  return 3;
    default:               return 4;
  }
}

inline void print_rec(std::ostream& os, const TermPtr& t, int min_prec) {
  const int pr = prec(t->kind);
  const bool paren = pr < min_prec;
  if (paren) os << "( ";
  switch (t->kind) {
    case Term::Kind::zero: os << "0"; break;
    case Term::Kind::one:  os << "1"; break;
    case Term::Kind::diag: os << "d " << t->a << " " << t->b; break;
    case Term::Kind::var:  os << "x " << t->a; break;
    case Term::Kind::neg:
      os << "- ";
      print_rec(os, t->lhs, prec(Term::Kind::neg));
      break;
    case Term::Kind::cyl:
      os << "c " << t->a << " ( ";
      print_rec(os, t->lhs, 0);
      os << " )";
      break;
    case Term::Kind::conj:
      print_rec(os, t->lhs, pr);
      os << " * ";
      print_rec(os, t->rhs, pr + 1);
      break;
    case Term::Kind::disj:
      print_rec(os, t->lhs, pr);
      os << " + ";
      print_rec(os, t->rhs, pr + 1);
      break;
  }
  if (paren) os << " )";
}

}  // namespace detail

inline std::string to_string(const TermPtr& t) {
  std::ostringstream os;
  detail::print_rec(os, t, 0);
  return os.str();
}

// --- parsing ----------------------------------------------------------------

struct ParseError : std::runtime_error {
  std::size_t position;  // token index in the input
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at token " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace detail {

struct Tokenizer {
  std::vector<std::string> tokens;
  std::size_t pos = 0;

  explicit Tokenizer(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
      if (ch == '(' || ch == ')' || ch == '*' || ch == '+' || ch == '-') {
        tokens.emplace_back(1, ch);
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '(' && text[j] != ')' && text[j] != '*' &&
             text[j] != '+' && text[j] != '-')
        ++j;
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  }

  bool done() const { return pos >= tokens.size(); }
  const std::string& peek() const {
    static const std::string kEnd = "<end>";
    return done() ? kEnd : tokens[pos];
  }
  std::string next() {
    if (done()) throw ParseError("unexpected end of input", pos);
    return tokens[pos++];
  }
  void expect(const std::string& tok) {
    if (done() || tokens[pos] != tok)
      throw ParseError("expected '" + tok + "', got '" + peek() + "'", pos);
    ++pos;
  }
};

inline int parse_int(Tokenizer& tz, const char* what) {
  std::string tok = tz.next();
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'",
                     tz.pos - 1);
  }
}

inline TermPtr parse_sum(Tokenizer& tz, const Params& p);

inline TermPtr parse_atom(Tokenizer& tz, const Params& p) {
  std::string tok = tz.next();
  std::size_t at = tz.pos - 1;
  if (tok == "0") return t_zero();
  if (tok == "1") return t_one();
  if (tok == "d") {
    int i = parse_int(tz, "diagonal index");
    int j = parse_int(tz, "diagonal index");
    if (i >= p.n || j >= p.n)
      throw ParseError("diagonal index out of bounds (n = " +
                           std::to_string(p.n) + ")", at);
    return t_diag(i, j);
  }
  if (tok == "x") {
    int l = parse_int(tz, "variable index");
    if (l >= p.m)
      throw ParseError("variable index out of bounds (m = " +
                           std::to_string(p.m) + ")", at);
    return t_var(l);
  }
  if (tok == "c") {
    int i = parse_int(tz, "cylindrification index");
    if (i >= p.n)
      throw ParseError("cylindrification index out of bounds (n = " +
                           std::to_string(p.n) + ")", at);
    tz.expect("(");
    TermPtr body = parse_sum(tz, p);
    tz.expect(")");
    return t_cyl(i, body);
  }
  if (tok == "(") {
    TermPtr body = parse_sum(tz, p);
    tz.expect(")");
    return body;
  }
  if (tok == "-") return t_neg(parse_atom(tz, p));
  throw ParseError("unexpected token '" + tok + "'", at);
}

inline TermPtr parse_prod(Tokenizer& tz, const Params& p) {
  TermPtr t = parse_atom(tz, p);
  while (!tz.done() && tz.peek() == "*") {
    tz.next();
    t = t_and(std::move(t), parse_atom(tz, p));
  }
  return t;
}

inline TermPtr parse_sum(Tokenizer& tz, const Params& p) {
  TermPtr t = parse_prod(tz, p);
  while (!tz.done() && tz.peek() == "+") {
    tz.next();
    t = t_or(std::move(t), parse_prod(tz, p));
  }
  return t;
}

}  // namespace detail

inline TermPtr parse_term(const std::string& text, const Params& p) {
  p.require_valid();
  detail::Tokenizer tz(text);
  if (tz.done()) throw ParseError("empty input", 0);
  TermPtr t = detail::parse_sum(tz, p);
  if (!tz.done())
    throw ParseError("trailing input '" + tz.peek() + "'", tz.pos);
  return t;
}

}  // namespace cyl
