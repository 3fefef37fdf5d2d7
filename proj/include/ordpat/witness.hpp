#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/errors.hpp"
#include "ordpat/pattern.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"
#include "ordpat/set_system.hpp"
#include "ordpat/sigma.hpp"

namespace ordpat {

inline constexpr std::size_t kDefaultIpWitnessBound = 4;

/// A set system realizing a consistency pattern: one set per index,
/// inconsistent pairs get disjoint sets, consistent sets get a common point.
struct PatternWitness {
  SetSystem system;
  ConsistencyPattern pattern;
};

/// Checks the two witness invariants and reports violations: an index pair
/// from I whose sets meet, or a consistent set whose sets have empty
/// intersection.
inline Report verify_pattern_witness(const PatternWitness& w) {
  Report r;
  const auto& p = w.pattern;
  auto set_of = [&](std::size_t j) -> const std::set<std::string>& {
    auto it = w.system.sets.find(p.indices[j]);
    if (it == w.system.sets.end()) throw UnknownElement(p.indices[j]);
    return it->second;
  };
  {
    std::vector<std::string> ws;
    for (const auto& [i, j] : p.inconsistent) {
      const auto& a = set_of(i);
      const auto& b = set_of(j);
      std::vector<std::string> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (!common.empty())
        ws.push_back("I=" + p.pair_string(i, j) + " shares " + common.front());
    }
    r.add(ws.empty() ? CheckResult::pass("disjoint")
                     : CheckResult::fail("disjoint", ws,
                                         "inconsistent pairs with a common "
                                         "point"));
  }
  {
    std::vector<std::string> ws;
    for (const auto& c : p.consistent) {
      std::set<std::string> acc(w.system.universe.begin(),
                                w.system.universe.end());
      for (std::size_t j : c) {
        const auto& sj = set_of(j);
        std::set<std::string> next;
        std::set_intersection(acc.begin(), acc.end(), sj.begin(), sj.end(),
                              std::inserter(next, next.end()));
        acc = std::move(next);
      }
      if (acc.empty()) ws.push_back("C=" + p.index_set_string(c));
    }
    r.add(ws.empty() ? CheckResult::pass("consistent")
                     : CheckResult::fail("consistent", ws,
                                         "consistent sets with empty "
                                         "intersection"));
  }
  return r;
}

/// The raw half-graph witness for OP: B_j = {a_i | i < j} over -n..n, so
/// a_i is in B_j exactly when i < j, and the B_j form a chain of nested
/// initial segments.
inline SetSystem op_half_graph_sets(std::size_t n) {
  if (n < 1) throw DegenerateParameter("op_half_graph_sets: n >= 1 required");
  const int ni = static_cast<int>(n);
  std::vector<std::string> universe;
  for (int i = -ni; i <= ni; ++i) universe.push_back("a_" + std::to_string(i));
  std::map<std::string, std::set<std::string>> sets;
  for (int j = -ni; j <= ni; ++j) {
    std::set<std::string> bj;
    for (int i = -ni; i < j; ++i) bj.insert("a_" + std::to_string(i));
    sets["B_" + std::to_string(j)] = std::move(bj);
  }
  return make_set_system(std::move(universe), std::move(sets));
}

/// A set system plus the map saying which set is meant to realize which
/// poset element, so tests can tell "the construction works as intended"
/// from "some embedding happens to exist".
struct IntendedSystem {
  SetSystem system;
  std::map<std::string, std::string> intended;  // poset label -> set name
};

/// Realizes sigma_op(n) by sets over {a_-n..a_n}: singletons for the alpha
/// side and, for the beta side, the trace of (-inf,-j) u [0,j). The source
/// works with indices 1..n, so sigma_op's alpha_k maps to S_alpha_{k+1}.
inline IntendedSystem op_sigma_sets(std::size_t n) {
  if (n < 1) throw DegenerateParameter("op_sigma_sets: n >= 1 required");
  const int ni = static_cast<int>(n);
  IntendedSystem out;
  std::vector<std::string> universe;
  for (int i = -ni; i <= ni; ++i) universe.push_back("a_" + std::to_string(i));
  std::map<std::string, std::set<std::string>> sets;
  for (int i = 1; i <= ni; ++i)
    sets["S_alpha_" + std::to_string(i)] = {"a_" + std::to_string(i)};
  for (int j = 1; j <= ni; ++j) {
    std::set<std::string> bj;
    for (int i = -ni; i <= ni; ++i)
      if (i < -j || (0 <= i && i < j)) bj.insert("a_" + std::to_string(i));
    sets["S_beta_" + std::to_string(j)] = std::move(bj);
  }
  out.system = make_set_system(std::move(universe), std::move(sets));
  for (int k = 0; k < ni; ++k) {
    out.intended["alpha_" + std::to_string(k)] =
        "S_alpha_" + std::to_string(k + 1);
    out.intended["beta_" + std::to_string(k)] =
        "S_beta_" + std::to_string(k + 1);
  }
  return out;
}

/// Realizes sigma_ip(n): singletons for alpha, and for each subset V one set
/// {a_i | i in V} plus a private tail point. The tails are the finite stand-in
/// for an almost disjoint family: they stop any inclusion between distinct
/// beta sets. Exponential in n, hence the bound.
inline IntendedSystem ip_sigma_sets(std::size_t n,
                                    std::size_t bound = kDefaultIpWitnessBound) {
  if (n < 1) throw DegenerateParameter("ip_sigma_sets: n >= 1 required");
  if (n > bound) throw BoundExceeded("ip_sigma_sets", n, bound);
  IntendedSystem out;
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < n; ++i)
    universe.push_back("a_" + std::to_string(i));
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k)
    universe.push_back("tail_" + std::to_string(k));
  std::map<std::string, std::set<std::string>> sets;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = "alpha_" + std::to_string(i);
    sets["S_" + a] = {"a_" + std::to_string(i)};
    out.intended[a] = "S_" + a;
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const std::string b = detail::subset_label(mask, n);
    std::set<std::string> sv{"tail_" + std::to_string(mask)};
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sv.insert("a_" + std::to_string(i));
    sets["S_" + b] = std::move(sv);
    out.intended[b] = "S_" + b;
  }
  out.system = make_set_system(std::move(universe), std::move(sets));
  return out;
}

/// The canonical realization of a pattern: a point a_C for every consistent
/// set (the common realization of C), one set per index collecting the a_C
/// with C containing it, plus per-index points e_j and two padding points
/// that no set contains. The e_j and pads only matter for the Sigma_P
/// system built on top of this model.
inline PatternWitness canonical_pattern_model(const ConsistencyPattern& p,
                                              bool padding = true) {
  if (!validate_pattern(p).ok())
    throw Error("canonical_pattern_model: pattern fails C1/C2 validation");
  PatternWitness w;
  w.pattern = p;
  std::vector<std::string> universe;
  for (std::size_t k = 0; k < p.consistent.size(); ++k)
    universe.push_back("a_C" + std::to_string(k));
  for (const auto& j : p.indices) universe.push_back("e_" + j);
  if (padding) {
    universe.push_back("pad_0");
    universe.push_back("pad_1");
  }
  std::map<std::string, std::set<std::string>> sets;
  for (std::size_t j = 0; j < p.indices.size(); ++j) {
    std::set<std::string> sj;
    for (std::size_t k = 0; k < p.consistent.size(); ++k)
      if (p.consistent[k].count(j)) sj.insert("a_C" + std::to_string(k));
    sets[p.indices[j]] = std::move(sj);
  }
  w.system = make_set_system(std::move(universe), std::move(sets));
  return w;
}

/// The four-level system over the canonical model's universe U:
/// S_alpha_C = {a_C}, S_beta_j = set_j u {e_j}, S_gamma_j = U minus
/// S_beta_j, S_delta_C = U minus {a_C}. For maximal patterns the intended
/// map embeds sigma_pattern(p).poset; for others check_intended_embedding
/// reports exactly which relations break.
inline IntendedSystem pattern_sigma_sets(const ConsistencyPattern& p,
                                         bool padding = true) {
  const PatternWitness model = canonical_pattern_model(p, padding);
  const std::set<std::string> full(model.system.universe.begin(),
                                   model.system.universe.end());
  IntendedSystem out;
  std::map<std::string, std::set<std::string>> sets;
  auto put = [&](const std::string& sigma_label, std::set<std::string> ext) {
    sets["S_" + sigma_label] = std::move(ext);
    out.intended[sigma_label] = "S_" + sigma_label;
  };
  for (std::size_t k = 0; k < p.consistent.size(); ++k) {
    const std::string ak = "a_C" + std::to_string(k);
    std::set<std::string> co = full;
    co.erase(ak);
    put("alpha_C" + std::to_string(k), {ak});
    put("delta_C" + std::to_string(k), std::move(co));
  }
  for (std::size_t j = 0; j < p.indices.size(); ++j) {
    std::set<std::string> beta = model.system.sets.at(p.indices[j]);
    beta.insert("e_" + p.indices[j]);
    std::set<std::string> gamma;
    std::set_difference(full.begin(), full.end(), beta.begin(), beta.end(),
                        std::inserter(gamma, gamma.end()));
    put("beta_" + p.indices[j], std::move(beta));
    put("gamma_" + p.indices[j], std::move(gamma));
  }
  out.system = make_set_system(model.system.universe, std::move(sets));
  return out;
}

/// Checks the intended map against a target poset, reporting three things
/// separately: injectivity on extensional classes, preservation of the
/// order, and reflection of the order. A failed reflection witness reads
/// "x < y in sets only": the inclusion holds although the poset relation
/// does not.
inline Report check_intended_embedding(const IntendedSystem& is,
                                       const Poset& sigma) {
  const InclusionPoset incl = inclusion_poset(is.system);
  std::vector<std::string> cls(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    auto it = is.intended.find(sigma.label(i));
    if (it == is.intended.end()) throw UnknownElement(sigma.label(i));
    auto ct = incl.class_of.find(it->second);
    if (ct == incl.class_of.end()) throw UnknownElement(it->second);
    cls[i] = ct->second;
  }
  Report r;
  {
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j)
        if (cls[i] == cls[j])
          ws.push_back(sigma.label(i) + " and " + sigma.label(j) +
                       " collapse to " + cls[i]);
    r.add(ws.empty() ? CheckResult::pass("intended_injective")
                     : CheckResult::fail("intended_injective", ws,
                                         "images share an extensional class"));
  }
  {
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma.less(i, j) && !incl.poset.less(cls[i], cls[j]))
          ws.push_back(sigma.label(i) + " < " + sigma.label(j) +
                       " lost in sets");
    r.add(ws.empty() ? CheckResult::pass("intended_preserve")
                     : CheckResult::fail("intended_preserve", ws,
                                         "poset relations without inclusion"));
  }
  {
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = 0; j < sigma.size(); ++j)
        if (!sigma.less(i, j) && cls[i] != cls[j] &&
            incl.poset.less(cls[i], cls[j]))
          ws.push_back(sigma.label(i) + " < " + sigma.label(j) +
                       " in sets only");
    r.add(ws.empty() ? CheckResult::pass("intended_reflect")
                     : CheckResult::fail("intended_reflect", ws,
                                         "inclusions without poset relations"));
  }
  return r;
}

/// Packages the intended map as an OrderEmbedding into the inclusion poset,
/// if it passes the independent embedding checker.
inline std::optional<OrderEmbedding> intended_embedding(
    const IntendedSystem& is, const Poset& sigma) {
  const InclusionPoset incl = inclusion_poset(is.system);
  OrderEmbedding e{sigma, incl.poset, {}};
  e.map.resize(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    auto it = is.intended.find(sigma.label(i));
    if (it == is.intended.end()) throw UnknownElement(sigma.label(i));
    auto ct = incl.class_of.find(it->second);
    if (ct == incl.class_of.end()) throw UnknownElement(it->second);
    e.map[i] = e.target.index_of(ct->second);
  }
  if (!verify_embedding(e)) return std::nullopt;
  return e;
}

namespace detail {

// Rechecks that e really is an embedding into the inclusion poset of s and
// hands back, per source label, the extension behind its image class.
inline std::map<std::string, const std::set<std::string>*> image_extents(
    const SetSystem& s, const OrderEmbedding& e) {
  const InclusionPoset incl = inclusion_poset(s);
  if (!(incl.poset == e.target))
    throw InvalidEmbedding(
        "embedding target is not the inclusion poset of the system");
  if (!verify_embedding(e))
    throw InvalidEmbedding("map fails the embedding checker");
  std::map<std::string, const std::set<std::string>*> out;
  for (std::size_t i = 0; i < e.source.size(); ++i)
    out[e.source.label(i)] = &s.sets.at(e.target.label(e.map[i]));
  return out;
}

}  // namespace detail

/// Recovers a pattern witness from any embedding of Sigma_P into an
/// inclusion poset: the set for index j is the extension of the beta_j
/// image minus that of the gamma_j image. No compactness anywhere: the
/// nonempty-intersection argument collapses to a finite union bounded by
/// the alpha_C/delta_C non-relation.
inline PatternWitness extract_pattern_witness(const SetSystem& s,
                                              const OrderEmbedding& e,
                                              const ConsistencyPattern& p) {
  const SigmaPatternPoset sp = sigma_pattern(p);
  if (!(e.source == sp.poset))
    throw InvalidEmbedding("embedding source is not Sigma_P of the pattern");
  const auto ext = detail::image_extents(s, e);
  PatternWitness w;
  w.pattern = p;
  w.system.universe = s.universe;
  for (std::size_t j = 0; j < p.indices.size(); ++j) {
    const auto& beta = *ext.at(sp.beta(j));
    const auto& gamma = *ext.at(sp.gamma(j));
    std::set<std::string> diff;
    std::set_difference(beta.begin(), beta.end(), gamma.begin(), gamma.end(),
                        std::inserter(diff, diff.end()));
    w.system.sets[p.indices[j]] = std::move(diff);
  }
  return w;
}

/// Reads the half-graph matrix off an embedding of sigma_op(n):
/// M[i][j] = (alpha_i image included in beta_j image). Throws if the matrix
/// differs anywhere from i < j, which a verified embedding cannot produce.
inline std::vector<std::vector<bool>> extract_half_graph(
    const SetSystem& s, const OrderEmbedding& e) {
  const auto ext = detail::image_extents(s, e);
  const std::size_t n = e.source.size() / 2;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ai = *ext.at("alpha_" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bj = *ext.at("beta_" + std::to_string(j));
      m[i][j] = std::includes(bj.begin(), bj.end(), ai.begin(), ai.end());
      if (m[i][j] != (i < j))
        throw InvalidEmbedding("half-graph cell (" + std::to_string(i) + "," +
                               std::to_string(j) + ") contradicts i<j");
    }
  }
  return m;
}

/// Reads the shattering matrix off an embedding of sigma_ip(n):
/// M[i][k] = (alpha_i image included in the image of beta for the k-coded
/// subset). Throws if it differs anywhere from membership i in V_k.
inline std::vector<std::vector<bool>> extract_shattering(
    const SetSystem& s, const OrderEmbedding& e) {
  const auto ext = detail::image_extents(s, e);
  std::size_t n = 0;
  while (ext.count("alpha_" + std::to_string(n))) ++n;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(std::size_t{1} << n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ai = *ext.at("alpha_" + std::to_string(i));
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
      const auto& bv = *ext.at(detail::subset_label(k, n));
      m[i][k] = std::includes(bv.begin(), bv.end(), ai.begin(), ai.end());
      if (m[i][k] != ((k >> i) & 1))
        throw InvalidEmbedding("shattering cell (" + std::to_string(i) + "," +
                               std::to_string(k) + ") contradicts membership");
    }
  }
  return m;
}

}  // namespace ordpat
