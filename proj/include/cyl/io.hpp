#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cyl/normal_form.hpp"
#include "cyl/structure.hpp"
#include "cyl/witness.hpp"

namespace cyl {

using nlohmann::json;

// --- forms -------------------------------------------------------------------
//
// {"degree": k, "color": ["d_0_0", "x_0", ...],
//  "subs": [[form, ...] per direction]}     (subs omitted at degree 0)

inline json form_to_json(const FormPool& pool, FormId f) {
  const Params& p = pool.params();
  json j;
  j["degree"] = pool.degree(f);
  json color = json::array();
  for (int g = 0; g < p.gen_count(); ++g)
    if (has_bit(pool.color(f), g)) color.push_back(gen_name(p, g));
  j["color"] = color;
  json subs = json::array();
  for (int i = 0; i < p.n; ++i) {
    json dir = json::array();
    for (FormId s : pool.subs(f, i)) dir.push_back(form_to_json(pool, s));
    subs.push_back(dir);
  }
  j["subs"] = subs;
  return j;
}

inline FormId form_from_json(FormPool& pool, const json& j) {
  const Params& p = pool.params();
  if (!j.is_object() || !j.contains("degree") || !j.contains("color"))
    throw std::runtime_error("form record needs degree and color");
  int degree = j.at("degree").get<int>();
  GenMask color = 0;
  for (const auto& name : j.at("color"))
    color |= GenMask{1} << gen_from_name(p, name.get<std::string>());
  std::vector<std::vector<FormId>> subs(p.n);
  if (j.contains("subs")) {
    const auto& js = j.at("subs");
    if (static_cast<int>(js.size()) != p.n)
      throw std::runtime_error("subs must have one entry per direction");
    for (int i = 0; i < p.n; ++i)
      for (const auto& rec : js[i]) subs[i].push_back(form_from_json(pool, rec));
  }
  return pool.make(degree, color, std::move(subs));
}

// --- structures ---------------------------------------------------------------
//
// {"nodes": [names], "T": [[["a","b"], ...] per i],
//  "E": [[names] per (i,j), row-major]}

inline json structure_to_json(const AtomStructure& s) {
  json j;
  j["n"] = s.n;
  j["nodes"] = s.names;
  json t = json::array();
  for (int i = 0; i < s.n; ++i) {
    json rel = json::array();
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        if (s.in_t(i, a, b)) rel.push_back({s.names[a], s.names[b]});
    t.push_back(rel);
  }
  j["T"] = t;
  json e = json::array();
  for (int i = 0; i < s.n; ++i)
    for (int jx = 0; jx < s.n; ++jx) {
      json members = json::array();
      for (int v = 0; v < s.size(); ++v)
        if (s.in_e(i, jx, v)) members.push_back(s.names[v]);
      e.push_back(members);
    }
  j["E"] = e;
  return j;
}

inline AtomStructure structure_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::string> names =
      j.at("nodes").get<std::vector<std::string>>();
  AtomStructure s(n, static_cast<int>(names.size()));
  s.names = names;
  std::map<std::string, int> index;
  for (int v = 0; v < s.size(); ++v) {
    if (index.count(s.names[v]))
      throw std::runtime_error("duplicate node name: " + s.names[v]);
    index[s.names[v]] = v;
  }
  auto node = [&](const json& name) {
    auto it = index.find(name.get<std::string>());
    if (it == index.end())
      throw std::runtime_error("unknown node: " + name.get<std::string>());
    return it->second;
  };
  const auto& t = j.at("T");
  if (static_cast<int>(t.size()) != n)
    throw std::runtime_error("T must have one relation per direction");
  for (int i = 0; i < n; ++i)
    for (const auto& pair : t[i]) s.set_t(i, node(pair.at(0)), node(pair.at(1)));
  const auto& e = j.at("E");
  if (static_cast<int>(e.size()) != n * n)
    throw std::runtime_error("E must have n*n member lists");
  for (int i = 0; i < n; ++i)
    for (int jx = 0; jx < n; ++jx)
      for (const auto& name : e[i * n + jx]) s.set_e(i, jx, node(name));
  return s;
}

inline json valuation_to_json(const AtomStructure& s, const Valuation& e) {
  json j = json::array();
  for (int l = 0; l < e.var_count(); ++l) {
    json members = json::array();
    for (int v = 0; v < s.size(); ++v)
      if (e.contains(l, v)) members.push_back(s.names[v]);
    j.push_back(members);
  }
  return j;
}

inline json witness_to_json(const FormPool& pool, const WitnessStructure& w) {
  json j = structure_to_json(w.base);
  j["root"] = w.base.names[w.root];
  json levels;
  json labels;
  for (int v = 0; v < w.base.size(); ++v) {
    levels[w.base.names[v]] = w.level[v];
    if (w.label[v]) labels[w.base.names[v]] = form_to_json(pool, *w.label[v]);
  }
  j["levels"] = levels;
  j["labels"] = labels;
  j["valuation"] = valuation_to_json(w.base, w.val);
  return j;
}

// --- DOT export ---------------------------------------------------------------
//
// T_i edges drawn undirected (the checked structures are symmetric) with a
// per-direction line style; diagonal memberships annotate the node labels.

inline const char* dot_style(int i) {
  switch (i) {
    case 0: return "solid";
    case 1: return "dashed";
    case 2: return "dotted";
    default: return "bold";
  }
}

inline std::string structure_to_dot(const AtomStructure& s,
                                    const std::map<int, std::string>& extra =
                                        {}) {
  std::ostringstream os;
  os << "graph atom_structure {\n  node [shape=circle fontsize=10];\n";
  for (int v = 0; v < s.size(); ++v) {
    std::set<std::string> ann;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        if (i != j && s.in_e(i, j, v))
          ann.insert("d" + std::to_string(i) + std::to_string(j));
    os << "  \"" << s.names[v] << "\" [label=\"" << s.names[v];
    for (const auto& a : ann) os << "\\n" << a;
    auto it = extra.find(v);
    if (it != extra.end()) os << "\\n" << it->second;
    os << "\"];\n";
  }
  for (int i = 0; i < s.n; ++i)
    for (int a = 0; a < s.size(); ++a)
      for (int b = a + 1; b < s.size(); ++b)
        if (s.in_t(i, a, b))
          os << "  \"" << s.names[a] << "\" -- \"" << s.names[b]
             << "\" [style=" << dot_style(i) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string witness_to_dot(const FormPool& pool,
                                  const WitnessStructure& w) {
  std::ostringstream os;
  os << "graph witness {\n  node [shape=circle fontsize=10];\n";
  // Level bands: one rank per level, tuple nodes at the bottom.
  std::map<int, std::vector<int>> by_level;
  for (int v = 0; v < w.base.size(); ++v) by_level[w.level[v]].push_back(v);
  for (const auto& [lvl, nodes] : by_level) {
    os << "  { rank=same;";
    for (int v : nodes) os << " \"" << w.base.names[v] << "\";";
    os << " }\n";
  }
  for (int v = 0; v < w.base.size(); ++v) {
    os << "  \"" << w.base.names[v] << "\" [";
    if (w.label[v]) {
      os << "label=\"" << w.base.names[v] << "\\n"
         << form_to_string(pool, *w.label[v]) << "\"";
      if (v == w.root) os << " penwidth=2";
    } else {
      os << "shape=box label=\"" << w.base.names[v] << "\"";
    }
    os << "];\n";
  }
  for (int i = 0; i < w.base.n; ++i)
    for (int a = 0; a < w.base.size(); ++a)
      for (int b = a + 1; b < w.base.size(); ++b)
        if (w.base.in_t(i, a, b))
          os << "  \"" << w.base.names[a] << "\" -- \"" << w.base.names[b]
             << "\" [style=" << dot_style(i) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cyl
