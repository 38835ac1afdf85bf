#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cyl/splitter.hpp"
#include "test_support.hpp"

using namespace cyl;

namespace {

// All satisfiable degree-0 forms below t for the pool's parameters.
std::vector<FormId> satisfiable_below_t(FormPool& pool) {
  std::vector<FormId> out;
  for (FormId f : enumerate_degree0(pool))
    if (color_below_t(pool.params(), pool.color(f)) &&
        is_satisfiable(pool, f).satisfiable)
      out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("build_chain: degree 0 gives the bare root") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  FormId tau = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(1, 1));
  WitnessStructure w = build_witness(pool, tau);
  Chain ch = build_chain(pool, w);
  CHECK(ch.nodes == std::vector<int>{w.root});
}

TEST_CASE("build_chain: alternating directions, constant color") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  GenMask cc = p.diag_bit(0, 0) | p.diag_bit(1, 1);
  FormId a0 = pool.make_degree0(cc);
  FormId f1 = pool.make(1, cc, {{a0}, {a0}});
  FormId f2 = pool.make(2, cc, {{f1}, {f1}});
  REQUIRE(is_satisfiable(pool, f2).satisfiable);
  WitnessStructure w = build_witness(pool, f2);
  Chain ch = build_chain(pool, w);
  REQUIRE(ch.nodes.size() == 3);
  CHECK(w.base.in_t(0, ch.nodes[0], ch.nodes[1]));
  CHECK(w.base.in_t(1, ch.nodes[1], ch.nodes[2]));
  for (std::size_t q = 0; q < ch.nodes.size(); ++q) {
    CHECK(pool.color(*w.label[ch.nodes[q]]) == cc);
    CHECK(pool.degree(*w.label[ch.nodes[q]]) == 2 - static_cast<int>(q));
  }
}

TEST_CASE("build_chain rejects forms with positive upper diagonals") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  FormId tau = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(0, 1) |
                                 p.diag_bit(1, 0) | p.diag_bit(1, 1));
  WitnessStructure w = build_witness(pool, tau);
  CHECK_THROWS_AS(build_chain(pool, w), PreconditionViolation);
}

TEST_CASE("wca extension: hand-traced n=2, k=0 shape") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  FormId tau = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(1, 1));
  WitnessStructure w = build_witness(pool, tau);
  Chain ch = build_chain(pool, w);
  AtomStructure plus;
  Valuation val;
  REQUIRE(extend_structure(pool, w, ch, plus, val).empty());

  // base node plus the two constant tuples
  REQUIRE(plus.size() == 3);
  for (int v = 1; v < 3; ++v) {
    CHECK(plus.in_e(0, 1, v));
    CHECK(plus.in_e(1, 0, v));
  }
  // exactly one of them hangs off the root, in direction 0
  int t0 = 0, t1 = 0;
  for (int v = 1; v < 3; ++v) {
    if (plus.in_t(0, 0, v)) ++t0;
    if (plus.in_t(1, 0, v)) ++t1;
  }
  CHECK(t0 == 1);
  CHECK(t1 == 0);
  CHECK(check_conditions(plus, Variant::wca).all_pass);

  // every labeled node still satisfies its label in the extension
  for (int v = 0; v < w.base.size(); ++v)
    if (w.label[v]) CHECK(models(plus, val, v, *w.label[v], pool));
}

TEST_CASE("split of the diagonal-free degree-0 form, wca: spec shapes") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  GenMask cc = p.diag_bit(0, 0) | p.diag_bit(1, 1);
  FormId tau = pool.make_degree0(cc);
  SplitResult r = split_form(pool, tau);
  REQUIRE(r.ok);

  FormId a0 = pool.make_degree0(cc);
  GenMask alldiag = cc | p.diag_bit(0, 1) | p.diag_bit(1, 0);
  FormId b = pool.make_degree0(alldiag);
  CHECK(r.sigma == pool.make(1, cc, {{a0}, {a0}}));
  CHECK(r.gamma == pool.make(1, cc, {{a0, b}, {a0}}));
  CHECK(disjoint(pool, r.sigma, r.gamma));
  CHECK(reduce_degree(pool, r.sigma, 0) == tau);
  CHECK(reduce_degree(pool, r.gamma, 0) == tau);
  // both certificates verify independently
  CHECK(is_satisfiable(pool, r.sigma).satisfiable);
  CHECK(is_satisfiable(pool, r.gamma).satisfiable);
}

TEST_CASE("split of the diagonal-free degree-0 form, nca: flip device") {
  Params p{2, 1, Variant::nca};
  FormPool pool(p);
  GenMask cc = p.diag_bit(0, 0) | p.diag_bit(1, 1);
  FormId tau = pool.make_degree0(cc);
  SplitResult r = split_form(pool, tau);
  REQUIRE(r.ok);
  CHECK(r.sigma != r.gamma);
  CHECK(reduce_degree(pool, r.sigma, 0) == tau);
  CHECK(reduce_degree(pool, r.gamma, 0) == tau);
  CHECK(is_satisfiable(pool, r.sigma).satisfiable);
  CHECK(is_satisfiable(pool, r.gamma).satisfiable);
  // gamma picks up the x-flipped diagonal-free form in direction 0
  FormId flipped = pool.make_degree0(cc | p.var_bit(0));
  const auto& gsub = pool.subs(r.gamma, 0);
  CHECK(std::find(gsub.begin(), gsub.end(), flipped) != gsub.end());
  const auto& ssub = pool.subs(r.sigma, 0);
  CHECK(std::find(ssub.begin(), ssub.end(), flipped) == ssub.end());
}

TEST_CASE("split precondition violations") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  FormId with_d01 = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(0, 1) |
                                      p.diag_bit(1, 0) | p.diag_bit(1, 1));
  CHECK_THROWS_AS(split_form(pool, with_d01), PreconditionViolation);
  FormId unsat = pool.make_degree0(p.diag_bit(1, 1));
  CHECK_THROWS_AS(split_form(pool, unsat), PreconditionViolation);
}

TEST_CASE("every satisfiable degree-0 form below t splits, both variants") {
  for (Variant variant : {Variant::nca, Variant::wca}) {
    Params p{2, 1, variant};
    FormPool pool(p);
    auto sats = satisfiable_below_t(pool);
    CHECK(sats.size() == (variant == Variant::nca ? 2u : 4u));
    for (FormId tau : sats) {
      SplitResult r = split_form(pool, tau);
      INFO(to_string(variant) << " " << form_to_string(pool, tau));
      REQUIRE(r.ok);
      CHECK(r.sigma != r.gamma);
      CHECK(reduce_degree(pool, r.sigma, 0) == tau);
      CHECK(reduce_degree(pool, r.gamma, 0) == tau);
    }
  }
}

TEST_CASE("divergence propagates along the whole chain") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  GenMask cc = p.diag_bit(0, 0) | p.diag_bit(1, 1);
  FormId a0 = pool.make_degree0(cc);
  FormId f1 = pool.make(1, cc, {{a0}, {a0}});
  FormId f2 = pool.make(2, cc, {{f1}, {f1}});
  SplitResult r = split_form(pool, f2);
  REQUIRE(r.ok);
  const int k = 2;
  for (int q = 0; q <= k; ++q) {
    int v = r.chain.nodes[q];
    FormId side_s =
        point_form(r.witness.base, r.witness.val, v, k - q + 1, pool);
    FormId side_g = point_form(r.plus, r.plus_val, v, k - q + 1, pool);
    CHECK(side_s != side_g);
  }
}

TEST_CASE("re-splitting sigma descends three levels") {
  for (Variant variant : {Variant::nca, Variant::wca}) {
    Params p{2, 1, variant};
    FormPool pool(p);
    FormId tau = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(1, 1));
    for (int depth = 0; depth < 3; ++depth) {
      SplitResult r = split_form(pool, tau);
      INFO(to_string(variant) << " depth " << depth);
      REQUIRE(r.ok);
      CHECK(color_below_t(p, pool.color(r.sigma)));
      tau = r.sigma;  // sigma is again satisfiable and below t
    }
    CHECK(pool.degree(tau) == 3);
  }
}

TEST_CASE("nca split without variables reports the obstruction honestly") {
  Params p{2, 0, Variant::nca};
  FormPool pool(p);
  FormId tau = pool.make_degree0(p.diag_bit(0, 0) | p.diag_bit(1, 1));
  REQUIRE(is_satisfiable(pool, tau).satisfiable);
  SplitResult r = split_form(pool, tau);
  CHECK_FALSE(r.ok);
  CHECK(r.failure.find("free variable") != std::string::npos);
}

TEST_CASE("nonatomicity report: exhaustive degree 0") {
  for (Variant variant : {Variant::nca, Variant::wca}) {
    Params p{2, 1, variant};
    FormPool pool(p);
    NonatomicityReport rep = nonatomicity_report(pool, 0, 0);
    INFO(to_string(variant));
    CHECK(rep.attempted == (variant == Variant::nca ? 2 : 4));
    CHECK(rep.verified == rep.attempted);
  }
}

TEST_CASE("nonatomicity report: sampled degree 1") {
  Params p{2, 1, Variant::wca};
  FormPool pool(p);
  NonatomicityReport rep = nonatomicity_report(pool, 1, 6, 42);
  int degree1 = 0;
  for (const auto& e : rep.entries)
    if (e.degree == 1) {
      ++degree1;
      INFO(e.failure);
      CHECK(e.ok);
    }
  CHECK(degree1 == 6);
  CHECK(rep.verified == rep.attempted);
}
