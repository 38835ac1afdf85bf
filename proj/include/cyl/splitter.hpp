#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyl/normal_form.hpp"
#include "cyl/point_form.hpp"
#include "cyl/rewriter.hpp"
#include "cyl/witness.hpp"

namespace cyl {

// Splitting a satisfiable form below t = prod{-d_ij : i<j<n} into two
// disjoint satisfiable forms one degree up, which is what rules out atoms in
// that region. The first structure is the form's own witness; the second is
// an extension of it that changes the root's point form at degree k+1 while
// preserving every label and every frame condition. Both outputs are point
// forms of the shared root, so each carries its realizing structure as a
// certificate, and all postconditions are re-checked before returning.

struct PreconditionViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Chain {
  std::vector<int> nodes;  // v_0 .. v_k; labels reduce tau degree by degree
};

struct SplitResult {
  bool ok = false;
  std::string failure;  // diagnostics when !ok

  FormId tau = 0;
  FormId sigma = 0;  // point form of the root in the witness
  FormId gamma = 0;  // point form of the root in the extension

  WitnessStructure witness;        // certificate structure for sigma
  AtomStructure plus;              // certificate structure for gamma
  Valuation plus_val;
  ConditionReport plus_conditions;
  Chain chain;
};

inline bool color_below_t(const Params& p, GenMask color) {
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (has_bit(color, p.diag_index(i, j))) return false;
  return true;
}

// Walks from the root along alternating directions 0,1,0,..., at each step
// into the child labeled with the one-lower reduction of the current label.
// Such a child exists for satisfiable diagonal-free labels: the reduction is
// a positive conjunct by C2 and the diagonal filter cannot fire.
inline Chain build_chain(FormPool& pool, const WitnessStructure& w) {
  const Params& p = pool.params();
  FormId tau = *w.label[w.root];
  if (!color_below_t(p, pool.color(tau)))
    throw PreconditionViolation("build_chain: root form is not below t");
  Chain ch;
  ch.nodes.push_back(w.root);
  const int k = pool.degree(tau);
  for (int q = 0; q < k; ++q) {
    int i = q % 2;
    int v = ch.nodes.back();
    FormId want = reduce_degree(pool, *w.label[v], k - q - 1);
    int next = -1;
    for (int c : w.children(v, i))
      if (*w.label[c] == want) next = c;
    if (next < 0)
      throw PreconditionViolation(
          "build_chain: no child labeled with the reduction at step " +
          std::to_string(q) + " (form unsatisfiable?)");
    ch.nodes.push_back(next);
  }
  return ch;
}

namespace detail {

inline int max_tuple_point(const WitnessStructure& w) {
  int mx = -1;
  for (const auto& t : w.tuple)
    if (t)
      for (int pt : *t) mx = std::max(mx, pt);
  return mx;
}

// The weakened variant's extension: a fresh substitution-closure part over n
// new points, glued to the chain end in direction d only. Seeding with both
// the identity-like tuple f (standing for the chain end itself) and f with
// position d overwritten gives the closure; f itself is not added.
inline void extend_wca(FormPool& pool, const WitnessStructure& w,
                       AtomStructure& plus, Valuation& val, int v_k, int d) {
  const Params& p = pool.params();
  int base_point = max_tuple_point(w) + 1;
  PointTuple f(p.n);
  for (int i = 0; i < p.n; ++i) f[i] = base_point + i;
  PointTuple seed = f;
  seed[d] = f[1 - d];
  auto closure = rep_closure({f, seed});

  std::vector<int> ids;
  std::vector<PointTuple> tuples;
  for (const auto& g : closure) {
    if (g == f) continue;
    int id = plus.add_node("g" + std::to_string(plus.size()));
    for (auto& set : val.sets) set.push_back(0);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (g[i] == g[j]) plus.set_e(i, j, id);
    ids.push_back(id);
    tuples.push_back(g);
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      for (int i = 0; i < p.n; ++i)
        if (agree_except(tuples[a], tuples[b], i))
          plus.set_t_sym(i, ids[a], ids[b]);
  for (std::size_t a = 0; a < ids.size(); ++a)
    if (agree_except(tuples[a], f, d)) plus.set_t_sym(d, v_k, ids[a]);
  plus.make_reflexive();
}

// The non-commutative variant's witness already carries every tuple part the
// diagonal-composition condition allows, so a second closure over fresh
// points would only duplicate point forms (or break the one-per-clique
// bound). Instead the chain end gets a fresh labeled neighbor in direction d
// whose color flips x_0, together with that node's own tuple part; the new
// degree-0 form in the root's reachable set is what drives the forms apart.
// Needs m >= 1.
inline std::string extend_nca(FormPool& pool, const WitnessStructure& w,
                              AtomStructure& plus, Valuation& val, int v_k,
                              int d) {
  const Params& p = pool.params();
  if (p.m < 1)
    return "nca extension needs at least one free variable; with m = 0 the "
           "degree-(k+1) forms below the chain labels admit no divergence";
  GenMask vcolor = pool.color(*w.label[v_k]);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && has_bit(vcolor, p.diag_index(i, j)))
        return "nca extension requires a fully diagonal-free chain color";
  GenMask flip = vcolor ^ p.var_bit(0);

  int fresh = plus.add_node("w_flip");
  for (auto& set : val.sets) set.push_back(0);
  for (int i = 0; i < p.n; ++i) plus.set_e(i, i, fresh);
  for (int l = 0; l < p.m; ++l)
    if (has_bit(flip, p.var_index(l))) val.set(l, fresh);

  // Join the chain end's whole d-clique to keep T_d an equivalence.
  for (int u = 0; u < plus.size() - 1; ++u)
    if (plus.in_t(d, v_k, u)) plus.set_t_sym(d, fresh, u);
  plus.set_t_sym(d, fresh, v_k);

  // Own tuple part in the remaining directions.
  int base_point = max_tuple_point(w) + 1;
  PointTuple f(p.n);
  for (int i = 0; i < p.n; ++i) f[i] = base_point + i;
  auto closure = rep_closure({f});
  std::vector<int> ids;
  std::vector<PointTuple> tuples;
  for (const auto& g : closure) {
    if (g == f) continue;
    int id = plus.add_node("g" + std::to_string(plus.size()));
    for (auto& set : val.sets) set.push_back(0);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (g[i] == g[j]) plus.set_e(i, j, id);
    ids.push_back(id);
    tuples.push_back(g);
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      for (int i = 0; i < p.n; ++i)
        if (agree_except(tuples[a], tuples[b], i))
          plus.set_t_sym(i, ids[a], ids[b]);
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (int i = 0; i < p.n; ++i) {
      if (i == d) continue;
      if (agree_except(tuples[a], f, i)) plus.set_t_sym(i, fresh, ids[a]);
    }
  plus.make_reflexive();
  return "";
}

}  // namespace detail

// The extended structure over a verified witness and chain. For wca this is
// the tuple-part extension at the chain end in direction d = k mod 2 (the
// direction the chain did not arrive from); for nca see extend_nca.
inline std::string extend_structure(FormPool& pool, const WitnessStructure& w,
                                    const Chain& ch, AtomStructure& plus,
                                    Valuation& val) {
  const Params& p = pool.params();
  plus = w.base;
  val = w.val;
  int v_k = ch.nodes.back();
  int k = static_cast<int>(ch.nodes.size()) - 1;
  int d = (k % 2 == 0) ? 0 : 1;
  if (p.variant == Variant::wca) {
    detail::extend_wca(pool, w, plus, val, v_k, d);
    return "";
  }
  return detail::extend_nca(pool, w, plus, val, v_k, d);
}

inline SplitResult split_form(FormPool& pool, FormId tau) {
  const Params& p = pool.params();
  SplitResult res;
  res.tau = tau;
  if (!color_below_t(p, pool.color(tau)))
    throw PreconditionViolation("split_form: form is not below t");
  SatResult sat = is_satisfiable(pool, tau);
  if (!sat.satisfiable)
    throw PreconditionViolation("split_form: form is unsatisfiable (" +
                                sat.failure + ")");
  res.witness = std::move(sat.witness);
  res.chain = build_chain(pool, res.witness);

  std::string ext_failure =
      extend_structure(pool, res.witness, res.chain, res.plus, res.plus_val);
  if (!ext_failure.empty()) {
    res.ok = false;
    res.failure = "extension: " + ext_failure;
    return res;
  }

  const int k = pool.degree(tau);
  res.sigma = point_form(res.witness.base, res.witness.val, res.witness.root,
                         k + 1, pool);
  res.gamma = point_form(res.plus, res.plus_val, res.witness.root, k + 1, pool);

  // Mechanical verification of every postcondition.
  std::ostringstream why;
  bool ok = true;
  if (res.sigma == res.gamma) {
    ok = false;
    why << "sigma and gamma coincide; ";
  }
  if (reduce_degree(pool, res.sigma, k) != tau) {
    ok = false;
    why << "sigma does not reduce to tau; ";
  }
  if (reduce_degree(pool, res.gamma, k) != tau) {
    ok = false;
    why << "gamma does not reduce to tau; ";
  }
  res.plus_conditions = check_conditions(res.plus, p.variant);
  if (!res.plus_conditions.all_pass) {
    ok = false;
    why << "extension fails conditions: " << res.plus_conditions.first_failure()
        << "; ";
  }
  // Every labeled node of the witness must still satisfy its label in the
  // extension (the fresh labeled node of the nca device has no stored label
  // in w, so it is covered by gamma's own realization instead).
  PointFormCache plus_cache(res.plus, res.plus_val, pool);
  for (int v = 0; v < res.witness.base.size() && ok; ++v) {
    if (!res.witness.label[v]) continue;
    FormId lv = *res.witness.label[v];
    if (plus_cache.at(v, pool.degree(lv)) != lv) {
      ok = false;
      why << "label no longer satisfied at " << res.witness.base.names[v]
          << "; ";
    }
  }
  res.ok = ok;
  if (!ok) res.failure = why.str();
  return res;
}

// --- aggregate demonstration -------------------------------------------------

struct ReportEntry {
  FormId tau = 0;
  int degree = 0;
  bool ok = false;
  FormId sigma = 0, gamma = 0;
  std::string failure;
};

struct NonatomicityReport {
  int degree_bound = 0;
  int attempted = 0;
  int verified = 0;
  std::vector<ReportEntry> entries;

  std::string summary() const {
    std::ostringstream os;
    os << verified << "/" << attempted << " splits verified";
    return os.str();
  }
};

namespace detail {

// Random structures that satisfy the variant's conditions, by rejection over
// random partitions and diagonal sets. Used to sample genuinely realizable
// forms: any point form of a valid structure is satisfiable by construction.
inline AtomStructure random_valid_structure(const Params& p, std::mt19937_64& rng,
                                            int max_nodes, Valuation& val_out) {
  for (;;) {
    std::uniform_int_distribution<int> size_dist(1, max_nodes);
    int sz = size_dist(rng);
    AtomStructure s(p.n, sz);
    for (int i = 0; i < p.n; ++i) {
      // random partition via random block assignment
      std::vector<int> block(sz);
      std::uniform_int_distribution<int> bdist(0, sz - 1);
      for (int v = 0; v < sz; ++v) block[v] = bdist(rng);
      for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
          if (block[a] == block[b]) s.set_t(i, a, b);
    }
    std::uniform_int_distribution<int> coin(0, 3);
    for (int v = 0; v < sz; ++v) {
      for (int i = 0; i < p.n; ++i) s.set_e(i, i, v);
      for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
          if (i != j && coin(rng) == 0) {
            s.set_e(i, j, v);
            s.set_e(j, i, v);  // bias toward the symmetric patterns
          }
    }
    if (!check_conditions(s, p.variant).all_pass) continue;
    val_out = Valuation(p.m, sz);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int l = 0; l < p.m; ++l)
      for (int v = 0; v < sz; ++v)
        if (bit(rng)) val_out.set(l, v);
    return s;
  }
}

}  // namespace detail

// Runs split_form over every satisfiable degree-0 form below t and over
// sampled satisfiable forms of higher degree (point forms of random valid
// structures at diagonal-free points). Failures are carried verbatim.
inline NonatomicityReport nonatomicity_report(FormPool& pool, int degree_bound,
                                              int sample_size,
                                              std::uint64_t seed = 1) {
  const Params& p = pool.params();
  NonatomicityReport rep;
  rep.degree_bound = degree_bound;

  auto run = [&](FormId tau, int deg) {
    ReportEntry e;
    e.tau = tau;
    e.degree = deg;
    ++rep.attempted;
    try {
      SplitResult r = split_form(pool, tau);
      e.ok = r.ok;
      e.sigma = r.sigma;
      e.gamma = r.gamma;
      if (!r.ok) e.failure = r.failure;
    } catch (const std::exception& ex) {
      e.ok = false;
      e.failure = ex.what();
    }
    if (e.ok) ++rep.verified;
    rep.entries.push_back(std::move(e));
  };

  // Degree 0: exhaustive over colors below t.
  std::vector<int> free_gens;
  for (int g = 0; g < p.gen_count(); ++g) {
    if (p.is_diag(g) && p.diag_i(g) < p.diag_j(g)) continue;
    free_gens.push_back(g);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_gens.size());
       ++mask) {
    GenMask color = 0;
    for (std::size_t b = 0; b < free_gens.size(); ++b)
      if ((mask >> b) & 1) color |= GenMask{1} << free_gens[b];
    FormId tau = pool.make_degree0(color);
    if (is_satisfiable(pool, tau)) run(tau, 0);
  }

  // Higher degrees: sampled realizable forms.
  std::mt19937_64 rng(seed);
  for (int deg = 1; deg <= degree_bound; ++deg) {
    int found = 0, guard = 0;
    while (found < sample_size && guard < sample_size * 200) {
      ++guard;
      Valuation e;
      AtomStructure s = detail::random_valid_structure(p, rng, 4, e);
      std::uniform_int_distribution<int> node(0, s.size() - 1);
      int v = node(rng);
      FormId f = point_form(s, e, v, deg, pool);
      if (!color_below_t(p, pool.color(f))) continue;
      run(f, deg);
      ++found;
    }
  }
  return rep;
}

}  // namespace cyl
