#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/enumerate.hpp"
#include "ordpat/errors.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// A finite universe with named subsets. Set names are distinct by
/// construction (map keys); extensionally equal sets under different names
/// are allowed and collapse in inclusion_poset.
struct SetSystem {
  std::vector<std::string> universe;
  std::map<std::string, std::set<std::string>> sets;
};

inline SetSystem make_set_system(
    std::vector<std::string> universe,
    std::map<std::string, std::set<std::string>> sets) {
  std::set<std::string> seen;
  for (const auto& u : universe)
    if (!seen.insert(u).second) throw Error("duplicate universe point: " + u);
  for (const auto& [name, members] : sets)
    for (const auto& m : members)
      if (!seen.count(m))
        throw Error("set " + name + " contains unknown point " + m);
  return SetSystem{std::move(universe), std::move(sets)};
}

/// The strict-inclusion order on the extensional classes of a set system.
/// class_of sends every set name to its class representative (the
/// lexicographically least name with that extension).
struct InclusionPoset {
  Poset poset;
  std::map<std::string, std::string> class_of;
};

inline InclusionPoset inclusion_poset(const SetSystem& s) {
  std::map<std::set<std::string>, std::string> rep_of_ext;
  InclusionPoset out;
  for (const auto& [name, ext] : s.sets) {
    auto [it, fresh] = rep_of_ext.try_emplace(ext, name);
    out.class_of[name] = it->second;  // map order makes the first name least
    (void)fresh;
  }
  std::vector<std::string> reps;
  std::vector<const std::set<std::string>*> exts;
  for (const auto& [ext, rep] : rep_of_ext) {
    reps.push_back(rep);
    exts.push_back(&ext);
  }
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j || exts[i]->size() >= exts[j]->size()) continue;
      if (std::includes(exts[j]->begin(), exts[j]->end(), exts[i]->begin(),
                        exts[i]->end()))
        pairs.emplace_back(reps[i], reps[j]);
    }
  out.poset = close_strict_pairs(std::move(reps), pairs);
  return out;
}

/// The system of principal ideals of a poset: one set per element, named by
/// the element, containing everything at or below it.
inline SetSystem down_set_system(const Poset& p) {
  SetSystem s;
  s.universe = p.elements();
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::set<std::string> ideal{p.label(i)};
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(j, i)) ideal.insert(p.label(j));
    s.sets[p.label(i)] = std::move(ideal);
  }
  return s;
}

/// Does sigma order-embed into the inclusion poset of s?
inline std::optional<OrderEmbedding> has_sop(const SetSystem& s,
                                             const Poset& sigma) {
  return find_embedding(sigma, inclusion_poset(s).poset);
}

namespace detail {

inline std::string pairs_string(const Poset& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : p.pairs()) {
    if (!first) out += ", ";
    out += a + "<" + b;
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/// Universality check: every poset with at most k elements embeds into the
/// inclusion poset of s. One report line per size, with the non-embeddable
/// posets as witnesses.
inline Report has_sup(const SetSystem& s, std::size_t k,
                      std::size_t bound = kDefaultEnumBound) {
  if (k > bound) throw BoundExceeded("has_sup", k, bound);
  Report rep;
  const Poset target = inclusion_poset(s).poset;
  for (std::size_t m = 1; m <= k; ++m) {
    const auto all = enumerate_posets(m, bound);
    std::vector<std::string> ws;
    for (std::size_t idx = 0; idx < all.size(); ++idx)
      if (!find_embedding(all[idx], target))
        ws.push_back("size " + std::to_string(m) + " poset " +
                     std::to_string(idx) + " " + detail::pairs_string(all[idx]));
    const std::string name = "sup_size_" + std::to_string(m);
    rep.add(ws.empty() ? CheckResult::pass(name)
                       : CheckResult::fail(name, ws, "posets with no embedding"));
  }
  return rep;
}

}  // namespace ordpat
