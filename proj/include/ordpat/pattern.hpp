#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/errors.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// A consistency pattern (J, I, C): an index set, a family of inconsistent
/// 2-element subsets, and a family of consistent subsets. Inconsistent pairs
/// are stored as normalized (lo, hi) index pairs; consistent sets are index
/// sets, distinct as sets. Build through make_pattern or a generator.
struct ConsistencyPattern {
  std::vector<std::string> indices;
  std::set<std::pair<std::size_t, std::size_t>> inconsistent;
  std::vector<std::set<std::size_t>> consistent;

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(indices.begin(), indices.end(), label);
    if (it == indices.end()) throw UnknownElement(label);
    return static_cast<std::size_t>(it - indices.begin());
  }

  bool inconsistent_pair(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    return inconsistent.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  std::string index_set_string(const std::set<std::size_t>& s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s) {
      if (!first) out += ",";
      out += indices[i];
      first = false;
    }
    return out + "}";
  }

  std::string pair_string(std::size_t a, std::size_t b) const {
    return index_set_string({a, b});
  }
};

/// Validating constructor used by parsers and generators alike. Rejects
/// duplicate indices, malformed pairs, undeclared members and duplicate
/// consistent sets (consistent sets are identified by extension: the Sigma_P
/// construction distinguishes its points by which set they came from).
inline ConsistencyPattern make_pattern(
    std::vector<std::string> indices,
    const std::vector<LabelPair>& inconsistent,
    const std::vector<std::vector<std::string>>& consistent) {
  ConsistencyPattern p;
  p.indices = std::move(indices);
  {
    std::set<std::string> seen;
    for (const auto& l : p.indices)
      if (!seen.insert(l).second)
        throw Error("duplicate index label: " + l);
  }
  for (const auto& [a, b] : inconsistent) {
    std::size_t ia = p.index_of(a), ib = p.index_of(b);
    if (ia == ib)
      throw Error("inconsistent pair must have two distinct indices: " + a);
    p.inconsistent.insert({std::min(ia, ib), std::max(ia, ib)});
  }
  std::set<std::set<std::size_t>> seen_sets;
  for (const auto& c : consistent) {
    std::set<std::size_t> s;
    for (const auto& l : c) s.insert(p.index_of(l));
    if (!seen_sets.insert(s).second)
      throw Error("duplicate consistent set: " + p.index_set_string(s));
    p.consistent.push_back(std::move(s));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Axiom checks. Failures are Report entries with witnesses, never exceptions.
// ---------------------------------------------------------------------------

/// C1: none of J, I, C empty. C2: no inconsistent pair contained in a
/// consistent set and no consistent set contained in an inconsistent pair.
inline Report validate_pattern(const ConsistencyPattern& p) {
  Report r;
  {
    std::vector<std::string> empties;
    if (p.indices.empty()) empties.push_back("J");
    if (p.inconsistent.empty()) empties.push_back("I");
    if (p.consistent.empty()) empties.push_back("C");
    r.add(empties.empty() ? CheckResult::pass("C1")
                          : CheckResult::fail("C1", empties, "empty family"));
  }
  {
    std::vector<std::string> ws;
    for (const auto& [a, b] : p.inconsistent)
      for (const auto& c : p.consistent) {
        const bool i_in_c = c.count(a) && c.count(b);
        const bool c_in_i =
            c.size() <= 2 && std::all_of(c.begin(), c.end(), [&](std::size_t x) {
              return x == a || x == b;
            });
        if (i_in_c || c_in_i)
          ws.push_back("I=" + p.pair_string(a, b) +
                       " C=" + p.index_set_string(c));
      }
    r.add(ws.empty() ? CheckResult::pass("C2")
                     : CheckResult::fail("C2", ws, "containment between I and C"));
  }
  return r;
}

/// M1: every pair of distinct indices is inconsistent or inside some
/// consistent set. M2: consistent sets are maximal. M3: every index has at
/// least two inconsistent partners. Failing axioms list all witnesses.
inline Report check_maximality(const ConsistencyPattern& p) {
  Report r;
  const std::size_t n = p.indices.size();
  {
    std::vector<std::string> ws;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (p.inconsistent_pair(a, b)) continue;
        bool covered = std::any_of(
            p.consistent.begin(), p.consistent.end(),
            [&](const std::set<std::size_t>& c) { return c.count(a) && c.count(b); });
        if (!covered) ws.push_back(p.pair_string(a, b));
      }
    r.add(ws.empty() ? CheckResult::pass("M1")
                     : CheckResult::fail("M1", ws, "undecided pairs"));
  }
  {
    std::vector<std::string> ws;
    for (const auto& c : p.consistent)
      for (std::size_t j = 0; j < n; ++j) {
        if (c.count(j)) continue;
        bool blocked = std::any_of(c.begin(), c.end(), [&](std::size_t i) {
          return p.inconsistent_pair(i, j);
        });
        if (!blocked)
          ws.push_back("C=" + p.index_set_string(c) + ", j=" + p.indices[j]);
      }
    r.add(ws.empty() ? CheckResult::pass("M2")
                     : CheckResult::fail("M2", ws, "extendable consistent sets"));
  }
  {
    std::vector<std::string> ws;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t partners = 0;
      for (std::size_t i = 0; i < n; ++i) partners += p.inconsistent_pair(i, j);
      if (partners < 2) ws.push_back(p.indices[j]);
    }
    r.add(ws.empty() ? CheckResult::pass("M3")
                     : CheckResult::fail("M3", ws,
                                         "fewer than two inconsistent partners"));
  }
  return r;
}

/// Weak maximality: any two distinct consistent sets differ on an
/// inconsistent pair of indices. Implied by M2.
inline Report check_weak_maximality(const ConsistencyPattern& p) {
  Report r;
  std::vector<std::string> ws;
  for (std::size_t x = 0; x < p.consistent.size(); ++x)
    for (std::size_t y = x + 1; y < p.consistent.size(); ++y) {
      const auto& c0 = p.consistent[x];
      const auto& c1 = p.consistent[y];
      bool found = false;
      for (auto i : c0) {
        for (auto j : c1)
          if (p.inconsistent_pair(i, j)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found)
        ws.push_back("C=" + p.index_set_string(c0) +
                     ", C'=" + p.index_set_string(c1));
    }
  r.add(ws.empty() ? CheckResult::pass("weak-max")
                   : CheckResult::fail("weak-max", ws,
                                       "consistent sets with no inconsistency "
                                       "between them"));
  return r;
}

/// Reports every index lying in no consistent set. Not one of the pattern
/// axioms; the exact-heights property of Sigma_P presumes it, so it is
/// audited separately instead of assumed.
inline Report check_coverage(const ConsistencyPattern& p) {
  Report r;
  std::vector<std::string> ws;
  for (std::size_t j = 0; j < p.indices.size(); ++j) {
    bool covered = std::any_of(
        p.consistent.begin(), p.consistent.end(),
        [&](const std::set<std::size_t>& c) { return c.count(j) != 0; });
    if (!covered) ws.push_back(p.indices[j]);
  }
  r.add(ws.empty() ? CheckResult::pass("coverage")
                   : CheckResult::fail("coverage", ws,
                                       "indices in no consistent set"));
  return r;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace detail {

struct TreeNode {
  std::vector<int> digits;
  std::string label;
};

inline std::string tree_label(const std::vector<int>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(digits[i]);
  }
  return s;
}

// All strings of length 1..depth over {0..branching-1}, ordered by length
// then lexicographically.
inline std::vector<TreeNode> ary_tree_nodes(std::size_t depth,
                                            std::size_t branching) {
  std::vector<TreeNode> nodes;
  std::vector<std::vector<int>> frontier{{}};
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& parent : frontier)
      for (int d = 0; d < static_cast<int>(branching); ++d) {
        auto digits = parent;
        digits.push_back(d);
        next.push_back(digits);
      }
    for (auto& digits : next) nodes.push_back({digits, tree_label(digits)});
    frontier = std::move(next);
  }
  return nodes;
}

inline bool prefix_of(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

inline bool tree_comparable(const TreeNode& a, const TreeNode& b) {
  return prefix_of(a.digits, b.digits) || prefix_of(b.digits, a.digits);
}

inline bool siblings(const TreeNode& a, const TreeNode& b) {
  if (a.digits.size() != b.digits.size() || a.digits == b.digits) return false;
  return std::equal(a.digits.begin(), a.digits.end() - 1, b.digits.begin());
}

}  // namespace detail

/// All maximal antichains of the comparability relation on {0..n-1}, each
/// sorted ascending, listed in lexicographic order.
inline std::vector<std::vector<std::size_t>> maximal_antichains(
    std::size_t n, const std::vector<std::vector<char>>& comparable) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto is_maximal = [&]() {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(cur.begin(), cur.end(), j) != cur.end()) continue;
      bool blocked = std::any_of(cur.begin(), cur.end(), [&](std::size_t a) {
        return comparable[a][j] != 0;
      });
      if (!blocked) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (!cur.empty() && is_maximal()) out.push_back(cur);
    for (std::size_t i = start; i < n; ++i) {
      bool fits = std::none_of(cur.begin(), cur.end(), [&](std::size_t a) {
        return comparable[a][i] != 0;
      });
      if (!fits) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

/// TP1 pattern on the binary tree of the given depth: indices are the
/// nonempty binary strings of length <= depth, inconsistent pairs are the
/// incomparable ones, consistent sets are the root-to-leaf branches.
inline ConsistencyPattern gen_tp1(std::size_t depth) {
  if (depth < 2)
    throw DegenerateParameter(
        "gen_tp1: depth >= 2 required (at depth 1 every node has a single "
        "incomparable partner, so M3 fails)");
  auto nodes = detail::ary_tree_nodes(depth, 2);
  std::vector<std::string> indices;
  for (const auto& nd : nodes) indices.push_back(nd.label);
  std::vector<LabelPair> inc;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (!detail::tree_comparable(nodes[a], nodes[b]))
        inc.emplace_back(nodes[a].label, nodes[b].label);
  std::vector<std::vector<std::string>> cons;
  for (const auto& leaf : nodes) {
    if (leaf.digits.size() != depth) continue;
    std::vector<std::string> branch;
    for (std::size_t len = 1; len <= depth; ++len)
      branch.push_back(detail::tree_label(
          {leaf.digits.begin(), leaf.digits.begin() + len}));
    cons.push_back(std::move(branch));
  }
  return make_pattern(std::move(indices), inc, cons);
}

/// TP2 pattern on a rows x cols grid: inconsistent pairs share a row,
/// consistent sets are the transversals picking one cell per row.
inline ConsistencyPattern gen_tp2(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 3)
    throw DegenerateParameter(
        "gen_tp2: rows >= 2 and cols >= 3 required (fewer columns leave "
        "cells with fewer than two same-row partners, so M3 fails)");
  auto cell = [](std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  };
  std::vector<std::string> indices;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) indices.push_back(cell(r, c));
  std::vector<LabelPair> inc;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c0 = 0; c0 < cols; ++c0)
      for (std::size_t c1 = c0 + 1; c1 < cols; ++c1)
        inc.emplace_back(cell(r, c0), cell(r, c1));
  std::vector<std::vector<std::string>> cons;
  std::vector<std::size_t> pick(rows, 0);
  for (;;) {
    std::vector<std::string> t;
    for (std::size_t r = 0; r < rows; ++r) t.push_back(cell(r, pick[r]));
    cons.push_back(std::move(t));
    std::size_t r = rows;
    while (r > 0 && ++pick[r - 1] == cols) pick[--r] = 0;
    if (r == 0) break;
  }
  return make_pattern(std::move(indices), inc, cons);
}

/// ATP pattern on the binary tree of the given depth: inconsistent pairs are
/// the comparable ones, consistent sets are all maximal antichains.
inline ConsistencyPattern gen_atp(std::size_t depth) {
  if (depth < 3)
    throw DegenerateParameter(
        "gen_atp: depth >= 3 required (at depth 2 a leaf is comparable only "
        "with its parent, so M3 fails)");
  auto nodes = detail::ary_tree_nodes(depth, 2);
  const std::size_t n = nodes.size();
  std::vector<std::string> indices;
  for (const auto& nd : nodes) indices.push_back(nd.label);
  std::vector<LabelPair> inc;
  std::vector<std::vector<char>> comp(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (detail::tree_comparable(nodes[a], nodes[b])) {
        comp[a][b] = comp[b][a] = 1;
        inc.emplace_back(nodes[a].label, nodes[b].label);
      }
  std::vector<std::vector<std::string>> cons;
  for (const auto& chain : maximal_antichains(n, comp)) {
    std::vector<std::string> c;
    for (std::size_t i : chain) c.push_back(nodes[i].label);
    cons.push_back(std::move(c));
  }
  return make_pattern(std::move(indices), inc, cons);
}

/// SOP3 pattern, truncated to {-n..n} x {0,1}: {(i,0),(j,1)} is inconsistent
/// when i >= j; the consistent sets are the cuts C_k = {(i,0) | i < k} u
/// {(j,1) | j >= k} for -n <= k <= n+1, so both extreme cuts (all of level 0,
/// all of level 1) are kept. The truncation leaves (-n,0) and (n,1) with a
/// single inconsistent partner each; check_maximality reports exactly that.
inline ConsistencyPattern gen_sop3(std::size_t n) {
  if (n < 1) throw DegenerateParameter("gen_sop3: n >= 1 required");
  const int ni = static_cast<int>(n);
  auto pt = [](int i, int level) {
    return "(" + std::to_string(i) + "," + std::to_string(level) + ")";
  };
  std::vector<std::string> indices;
  for (int level = 0; level <= 1; ++level)
    for (int i = -ni; i <= ni; ++i) indices.push_back(pt(i, level));
  std::vector<LabelPair> inc;
  for (int i = -ni; i <= ni; ++i)
    for (int j = -ni; j <= i; ++j) inc.emplace_back(pt(i, 0), pt(j, 1));
  std::vector<std::vector<std::string>> cons;
  for (int k = -ni; k <= ni + 1; ++k) {
    std::vector<std::string> ck;
    for (int i = -ni; i < k; ++i) ck.push_back(pt(i, 0));
    for (int j = std::max(k, -ni); j <= ni; ++j) ck.push_back(pt(j, 1));
    cons.push_back(std::move(ck));
  }
  return make_pattern(std::move(indices), inc, cons);
}

/// The classic (deliberately non-maximal) TP pattern on the branching-ary
/// tree: inconsistent pairs are siblings, consistent sets are branches.
/// Fails M1 and M2; passes weak maximality; M3 holds only for branching >= 3.
inline ConsistencyPattern gen_tp(std::size_t depth, std::size_t branching) {
  if (depth < 2 || branching < 2)
    throw DegenerateParameter("gen_tp: depth >= 2 and branching >= 2 required");
  auto nodes = detail::ary_tree_nodes(depth, branching);
  std::vector<std::string> indices;
  for (const auto& nd : nodes) indices.push_back(nd.label);
  std::vector<LabelPair> inc;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (detail::siblings(nodes[a], nodes[b]))
        inc.emplace_back(nodes[a].label, nodes[b].label);
  std::vector<std::vector<std::string>> cons;
  for (const auto& leaf : nodes) {
    if (leaf.digits.size() != depth) continue;
    std::vector<std::string> branch;
    for (std::size_t len = 1; len <= depth; ++len)
      branch.push_back(detail::tree_label(
          {leaf.digits.begin(), leaf.digits.begin() + len}));
    cons.push_back(std::move(branch));
  }
  return make_pattern(std::move(indices), inc, cons);
}

/// The n-chain c0 < c1 < ... (the Sigma of classic SOP).
inline Poset gen_chain(std::size_t n) {
  if (n < 1) throw DegenerateParameter("gen_chain: n >= 1 required");
  std::vector<std::string> elements;
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back("c" + std::to_string(i));
    if (i) pairs.emplace_back("c" + std::to_string(i - 1),
                              "c" + std::to_string(i));
  }
  return close_strict_pairs(std::move(elements), pairs);
}

}  // namespace ordpat
