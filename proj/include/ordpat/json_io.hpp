#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordpat/errors.hpp"
#include "ordpat/pattern.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"
#include "ordpat/set_system.hpp"
#include "ordpat/sigma.hpp"
#include "ordpat/witness.hpp"

namespace ordpat {

using json = nlohmann::json;

namespace detail {

inline const json& need(const json& j, const char* key,
                        const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

inline std::vector<std::string> string_array(const json& j,
                                             const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline std::vector<LabelPair> pair_array(const json& j,
                                         const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of pairs");
  std::vector<LabelPair> out;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_string() ||
        !x[1].is_string())
      throw ParseError(where, "each entry must be a pair of strings");
    out.emplace_back(x[0].get<std::string>(), x[1].get<std::string>());
  }
  return out;
}

inline json pairs_to_json(const std::vector<LabelPair>& pairs) {
  json a = json::array();
  for (const auto& [x, y] : pairs) a.push_back(json::array({x, y}));
  return a;
}

}  // namespace detail

// --- Poset: {"elements": [...], "lt": [["a","b"], ...]} -------------------
// Input lt may be any generating set; the parsed poset is closed, and
// emission always writes the full closed relation.

inline Poset poset_from_json(const json& j) {
  auto elements = detail::string_array(detail::need(j, "elements", "poset"),
                                       "poset.elements");
  auto lt = detail::pair_array(detail::need(j, "lt", "poset"), "poset.lt");
  return close_strict_pairs(std::move(elements), lt);
}

inline json poset_to_json(const Poset& p) {
  return json{{"elements", p.elements()}, {"lt", detail::pairs_to_json(p.pairs())}};
}

// --- Pattern: {"indices": [...], "inconsistent": [["i","j"], ...],
//               "consistent": [["i","k",...], ...]} -----------------------

inline ConsistencyPattern pattern_from_json(const json& j) {
  auto indices = detail::string_array(detail::need(j, "indices", "pattern"),
                                      "pattern.indices");
  auto inc = detail::pair_array(detail::need(j, "inconsistent", "pattern"),
                                "pattern.inconsistent");
  const json& cj = detail::need(j, "consistent", "pattern");
  if (!cj.is_array())
    throw ParseError("pattern.consistent", "expected an array of arrays");
  std::vector<std::vector<std::string>> cons;
  for (std::size_t k = 0; k < cj.size(); ++k)
    cons.push_back(detail::string_array(
        cj[k], "pattern.consistent[" + std::to_string(k) + "]"));
  try {
    return make_pattern(std::move(indices), inc, cons);
  } catch (const Error& e) {
    throw ParseError("pattern", e.what());
  }
}

inline json pattern_to_json(const ConsistencyPattern& p) {
  json inc = json::array();
  for (const auto& [a, b] : p.inconsistent)
    inc.push_back(json::array({p.indices[a], p.indices[b]}));
  json cons = json::array();
  for (const auto& c : p.consistent) {
    json cs = json::array();
    for (std::size_t i : c) cs.push_back(p.indices[i]);
    cons.push_back(std::move(cs));
  }
  return json{{"indices", p.indices},
              {"inconsistent", std::move(inc)},
              {"consistent", std::move(cons)}};
}

// --- SetSystem: {"universe": [...], "sets": {"name": [...], ...}} ---------
// Extra keys (notably "intended") are tolerated, so files written by the
// witness verbs parse as plain systems too.

inline SetSystem set_system_from_json(const json& j) {
  auto universe = detail::string_array(detail::need(j, "universe", "system"),
                                       "system.universe");
  const json& sj = detail::need(j, "sets", "system");
  if (!sj.is_object())
    throw ParseError("system.sets", "expected an object of arrays");
  std::map<std::string, std::set<std::string>> sets;
  for (const auto& [name, members] : sj.items()) {
    auto v = detail::string_array(members, "system.sets." + name);
    sets[name] = {v.begin(), v.end()};
  }
  try {
    return make_set_system(std::move(universe), std::move(sets));
  } catch (const Error& e) {
    throw ParseError("system", e.what());
  }
}

inline json set_system_to_json(const SetSystem& s) {
  json sets = json::object();
  for (const auto& [name, members] : s.sets)
    sets[name] = std::vector<std::string>(members.begin(), members.end());
  return json{{"universe", s.universe}, {"sets", std::move(sets)}};
}

inline IntendedSystem intended_system_from_json(const json& j) {
  IntendedSystem out;
  out.system = set_system_from_json(j);
  if (j.is_object() && j.contains("intended")) {
    const json& ij = j["intended"];
    if (!ij.is_object())
      throw ParseError("system.intended", "expected an object of strings");
    for (const auto& [from, to] : ij.items()) {
      if (!to.is_string())
        throw ParseError("system.intended." + from, "expected a string");
      out.intended[from] = to.get<std::string>();
    }
  }
  return out;
}

inline json intended_system_to_json(const IntendedSystem& is) {
  json j = set_system_to_json(is.system);
  json ij = json::object();
  for (const auto& [from, to] : is.intended) ij[from] = to;
  j["intended"] = std::move(ij);
  return j;
}

// --- Report and embeddings ------------------------------------------------

inline json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"status", to_string(c.status)},
                          {"witnesses", c.witnesses},
                          {"note", c.note}});
  return json{{"checks", std::move(checks)}, {"ok", r.ok()}};
}

inline json embedding_to_json(const OrderEmbedding& e) {
  json m = json::object();
  for (const auto& [from, to] : e.label_map()) m[from] = to;
  return json{{"map", std::move(m)}};
}

inline json sigma_audit_to_json(const SigmaPatternPoset& sp) {
  return json{{"poset", poset_to_json(sp.poset)},
              {"r0", detail::pairs_to_json(sp.r0)},
              {"r1", detail::pairs_to_json(sp.r1)},
              {"r2", detail::pairs_to_json(sp.r2)}};
}

// --- Files ----------------------------------------------------------------

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ordpat
