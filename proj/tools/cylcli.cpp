// cylcli — command-line front end for the cylkit library.
//
// Thin adapters only: every subcommand parses its inputs, calls the one
// library entry point it wraps, and prints the result in the documented
// file formats. Exit codes: 0 success, 1 usage or validation error,
// 2 budget exceeded, 3 split verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyl/cyl.hpp"

namespace {

using namespace cyl;

struct CommonArgs {
  int n = 2;
  int m = 1;
  std::string variant = "wca";
  std::uint64_t budget = 1000000;
  int max_nodes = 3;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string dot_path;

  Params params() const { return Params{n, m, variant_from_string(variant)}; }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--n", args.n, "dimension (>= 2)");
  cmd->add_option("--m", args.m, "number of free variables");
  cmd->add_option("--variant", args.variant, "algebra class")
      ->check(CLI::IsMember({"nca", "wca"}));
  cmd->add_option("--budget", args.budget, "enumeration budget (forms)");
  cmd->add_option("--max-nodes", args.max_nodes, "oracle structure size bound");
  cmd->add_option("--seed", args.seed, "random seed for sampled reports");
  cmd->add_option("--out", args.out_path, "write the main artifact to a file");
  cmd->add_option("--dot", args.dot_path, "write a DOT rendering to a file");
}

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload;
}

void maybe_write(const std::string& path, const std::string& payload) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload;
}

FormId load_form(FormPool& pool, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read form file " + path);
  json j = json::parse(in);
  return form_from_json(pool, j);
}

json sat_certificate_json(FormPool& pool, const SatResult& r) {
  json j;
  j["satisfiable"] = r.satisfiable;
  if (!r.satisfiable) j["failure"] = r.failure;
  j["witness"] = witness_to_json(pool, r.witness);
  json conds = json::array();
  for (const auto& e : r.conditions.entries) {
    json c;
    c["id"] = e.id;
    c["pass"] = e.pass;
    if (!e.pass) c["counterexample"] = e.counterexample;
    conds.push_back(c);
  }
  j["conditions"] = conds;
  return j;
}

int run_forms(const CommonArgs& args) {
  FormPool pool(args.params());
  auto forms = enumerate_degree0(pool, args.budget);
  json out = json::array();
  for (FormId f : forms) out.push_back(form_to_json(pool, f));
  std::cout << forms.size() << " degree-0 forms\n";
  maybe_write(args.out_path, out.dump(2));
  if (args.out_path.empty() && forms.size() <= 64)
    std::cout << out.dump(2) << "\n";
  return 0;
}

int run_sat(const CommonArgs& args, const std::string& form_path) {
  FormPool pool(args.params());
  FormId tau = load_form(pool, form_path);
  SatResult r = is_satisfiable(pool, tau);
  if (r.satisfiable)
    std::cout << "satisfiable\n";
  else
    std::cout << "unsatisfiable: " << r.failure << "\n";
  maybe_write(args.out_path, sat_certificate_json(pool, r).dump(2));
  maybe_write(args.dot_path, witness_to_dot(pool, r.witness));
  return 0;
}

int run_witness(const CommonArgs& args, const std::string& form_path) {
  FormPool pool(args.params());
  FormId tau = load_form(pool, form_path);
  SatResult r = is_satisfiable(pool, tau);
  std::cout << (r.satisfiable ? "witness verifies" : "witness fails: " + r.failure)
            << "\n";
  write_or_print(args.out_path, sat_certificate_json(pool, r).dump(2));
  maybe_write(args.dot_path, witness_to_dot(pool, r.witness));
  return 0;
}

int run_rewrite(const CommonArgs& args, const std::string& term_text) {
  Params p = args.params();
  FormPool pool(p);
  TermPtr t = parse_term(term_text, p);
  FormSet fs = rewrite(pool, t, args.budget);
  json out;
  out["degree"] = fs.degree;
  json members = json::array();
  for (FormId f : fs.members) members.push_back(form_to_json(pool, f));
  out["members"] = members;
  std::cout << fs.members.size() << " forms of degree " << fs.degree << "\n";
  write_or_print(args.out_path, out.dump(2));
  return 0;
}

int run_decide(const CommonArgs& args, const std::string& lhs,
               const std::string& rhs) {
  Params p = args.params();
  FormPool pool(p);
  bool equal = decide_equation(pool, parse_term(lhs, p), parse_term(rhs, p),
                               args.budget);
  std::cout << (equal ? "equal" : "not equal") << "\n";
  return 0;
}

int run_split(const CommonArgs& args, const std::string& form_path) {
  FormPool pool(args.params());
  FormId tau = load_form(pool, form_path);
  SplitResult r = split_form(pool, tau);
  if (!r.ok) {
    std::cerr << "verification failure: " << r.failure << "\n";
    return 3;
  }
  json out;
  out["tau"] = form_to_json(pool, tau);
  out["sigma"] = form_to_json(pool, r.sigma);
  out["gamma"] = form_to_json(pool, r.gamma);
  json certs;
  certs["sigma"] = witness_to_json(pool, r.witness);
  json plus = structure_to_json(r.plus);
  plus["valuation"] = valuation_to_json(r.plus, r.plus_val);
  plus["root"] = r.plus.names[r.witness.root];
  certs["gamma"] = plus;
  out["certificates"] = certs;
  std::cout << "split verified: sigma != gamma, both below tau and satisfiable\n";
  write_or_print(args.out_path, out.dump(2));
  maybe_write(args.dot_path, structure_to_dot(r.plus));
  return 0;
}

int run_report(const CommonArgs& args, int degree_bound, int samples) {
  FormPool pool(args.params());
  NonatomicityReport rep =
      nonatomicity_report(pool, degree_bound, samples, args.seed);
  std::cout << rep.summary() << "\n";
  json out;
  out["degree_bound"] = rep.degree_bound;
  out["attempted"] = rep.attempted;
  out["verified"] = rep.verified;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je;
    je["tau"] = form_to_json(pool, e.tau);
    je["degree"] = e.degree;
    je["ok"] = e.ok;
    if (e.ok) {
      je["sigma"] = form_to_json(pool, e.sigma);
      je["gamma"] = form_to_json(pool, e.gamma);
    } else {
      je["failure"] = e.failure;
    }
    entries.push_back(je);
  }
  out["entries"] = entries;
  maybe_write(args.out_path, out.dump(2));
  return rep.verified == rep.attempted ? 0 : 3;
}

int run_axioms(const CommonArgs& args) {
  auto eqs = instantiate_axioms(args.params());
  json out = json::array();
  for (const auto& eq : eqs) {
    std::cout << to_string(eq) << "\n";
    json je;
    je["name"] = eq.name;
    je["lhs"] = to_string(eq.lhs);
    je["rhs"] = to_string(eq.rhs);
    je["variables"] = eq.var_count;
    out.push_back(je);
  }
  maybe_write(args.out_path, out.dump(2));
  return 0;
}

int run_oracle(const CommonArgs& args, const std::string& form_path) {
  FormPool pool(args.params());
  FormId tau = load_form(pool, form_path);
  SearchSpace sp{args.params(), args.max_nodes};
  auto found = oracle_find(pool, tau, sp);
  if (found) {
    std::cout << "satisfiable within " << args.max_nodes << " nodes (at node "
              << found->structure.names[found->node] << ")\n";
    json out = structure_to_json(found->structure);
    out["valuation"] = valuation_to_json(found->structure, found->valuation);
    out["node"] = found->structure.names[found->node];
    maybe_write(args.out_path, out.dump(2));
    maybe_write(args.dot_path, structure_to_dot(found->structure));
  } else {
    std::cout << "not satisfiable within " << args.max_nodes << " nodes\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for non-commutative and weakened "
               "cylindric algebras"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string form_path, term_text, lhs, rhs;
  int degree_bound = 0, samples = 20;

  CLI::App* forms = app.add_subcommand("forms", "enumerate degree-0 forms");
  add_common(forms, args);

  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability of a form");
  add_common(sat, args);
  sat->add_option("--form", form_path, "form file (JSON)")->required();

  CLI::App* witness =
      app.add_subcommand("witness", "build and verify the witness structure");
  add_common(witness, args);
  witness->add_option("--form", form_path, "form file (JSON)")->required();

  CLI::App* rewrite_cmd =
      app.add_subcommand("rewrite", "rewrite a term into degree-0 forms");
  add_common(rewrite_cmd, args);
  rewrite_cmd->add_option("term", term_text, "term string")->required();

  CLI::App* decide =
      app.add_subcommand("decide", "decide an equation between two terms");
  add_common(decide, args);
  decide->add_option("lhs", lhs, "left term")->required();
  decide->add_option("rhs", rhs, "right term")->required();

  CLI::App* split = app.add_subcommand(
      "split", "split a satisfiable diagonal-free form into two");
  add_common(split, args);
  split->add_option("--form", form_path, "form file (JSON)")->required();

  CLI::App* report =
      app.add_subcommand("report", "run the non-atomicity demonstration");
  add_common(report, args);
  report->add_option("--degree-bound", degree_bound, "highest sampled degree");
  report->add_option("--samples", samples, "samples per degree above 0");

  CLI::App* axioms = app.add_subcommand("axioms", "emit instantiated axioms");
  add_common(axioms, args);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive small-structure satisfiability search");
  add_common(oracle, args);
  oracle->add_option("--form", form_path, "form file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    args.params().require_valid();
    if (forms->parsed()) return run_forms(args);
    if (sat->parsed()) return run_sat(args, form_path);
    if (witness->parsed()) return run_witness(args, form_path);
    if (rewrite_cmd->parsed()) return run_rewrite(args, term_text);
    if (decide->parsed()) return run_decide(args, lhs, rhs);
    if (split->parsed()) return run_split(args, form_path);
    if (report->parsed()) return run_report(args, degree_bound, samples);
    if (axioms->parsed()) return run_axioms(args);
    if (oracle->parsed()) return run_oracle(args, form_path);
  } catch (const cyl::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const cyl::PreconditionViolation& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
