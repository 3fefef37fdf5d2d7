#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/errors.hpp"

namespace ordpat {

using LabelPair = std::pair<std::string, std::string>;

/// A finite strict partial order over string labels.
///
/// Elements are stored sorted lexicographically so every search and every
/// serialization is reproducible. The relation is kept transitively closed
/// and irreflexive at all times; the only way to build a nonempty Poset is
/// close_strict_pairs, which closes a generating set of pairs and rejects
/// cycles.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& elements() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool contains(const std::string& label) const {
    return index_.count(label) != 0;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownElement(label);
    return it->second;
  }

  bool less(std::size_t a, std::size_t b) const { return lt_[a][b] != 0; }
  bool less(const std::string& a, const std::string& b) const {
    return less(index_of(a), index_of(b));
  }
  bool comparable(std::size_t a, std::size_t b) const {
    return less(a, b) || less(b, a);
  }

  std::size_t below_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < size(); ++j) c += less(j, i);
    return c;
  }
  std::size_t above_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < size(); ++j) c += less(i, j);
    return c;
  }

  std::size_t relation_size() const {
    std::size_t c = 0;
    for (const auto& row : lt_) c += std::count(row.begin(), row.end(), char(1));
    return c;
  }

  /// All pairs of the (closed) relation, sorted lexicographically.
  std::vector<LabelPair> pairs() const {
    std::vector<LabelPair> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (less(a, b)) out.emplace_back(labels_[a], labels_[b]);
    return out;  // label order is lexicographic, so this is already sorted
  }

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && lt_ == other.lt_;
  }

 private:
  friend Poset close_strict_pairs(std::vector<std::string>,
                                  const std::vector<LabelPair>&);

  std::vector<std::string> labels_;            // sorted, distinct
  std::map<std::string, std::size_t> index_;   // label -> position in labels_
  std::vector<std::vector<char>> lt_;          // lt_[a][b] != 0 iff a < b
};

/// Closes `pairs` transitively over `elements` and returns the resulting
/// strict order. Throws UnknownElement for undeclared pair coordinates and
/// CycleDetected (with a witness cycle) if the closure would be reflexive.
/// Idempotent: feeding back a closed relation returns the identical Poset.
inline Poset close_strict_pairs(std::vector<std::string> elements,
                                const std::vector<LabelPair>& pairs) {
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    if (elements[i] == elements[i + 1])
      throw Error("duplicate element label: " + elements[i]);

  Poset p;
  p.labels_ = std::move(elements);
  for (std::size_t i = 0; i < p.labels_.size(); ++i) p.index_[p.labels_[i]] = i;

  const std::size_t n = p.labels_.size();
  std::vector<std::vector<char>> gen(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : pairs) {
    auto ia = p.index_.find(a);
    if (ia == p.index_.end()) throw UnknownElement(a);
    auto ib = p.index_.find(b);
    if (ib == p.index_.end()) throw UnknownElement(b);
    gen[ia->second][ib->second] = 1;
  }

  // Warshall closure of the generating pairs.
  auto lt = gen;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!lt[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (lt[k][j]) lt[i][j] = 1;
    }

  for (std::size_t i = 0; i < n; ++i) {
    if (!lt[i][i]) continue;
    // Recover a concrete cycle through i by DFS over the generating pairs.
    std::vector<std::size_t> path{i};
    std::vector<char> on_path(n, 0);
    on_path[i] = 1;
    std::vector<std::string> witness;
    auto dfs = [&](auto&& self, std::size_t v) -> bool {
      for (std::size_t w = 0; w < n; ++w) {
        if (!gen[v][w]) continue;
        if (w == i) {
          for (std::size_t x : path) witness.push_back(p.labels_[x]);
          witness.push_back(p.labels_[i]);
          return true;
        }
        if (on_path[w] || !lt[w][i]) continue;  // only walk toward i
        on_path[w] = 1;
        path.push_back(w);
        if (self(self, w)) return true;
        path.pop_back();
      }
      return false;
    };
    dfs(dfs, i);
    throw CycleDetected(std::move(witness));
  }

  p.lt_ = std::move(lt);
  return p;
}

/// height(x) = length of the longest strictly descending chain below x,
/// indexed like p.elements(). Level n is the preimage of n.
inline std::vector<std::size_t> heights(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n), h(n, 0);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = p.below_count(i);
  // y < x implies below(y) < below(x), so this is a topological order.
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (std::size_t x : order)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(y, x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

inline std::size_t max_height(const Poset& p) {
  std::size_t m = 0;
  for (std::size_t h : heights(p)) m = std::max(m, h);
  return m;
}

/// The poset with the relation reversed. dual(dual(p)) == p.
inline Poset dual(const Poset& p) {
  std::vector<LabelPair> rev;
  for (auto& [a, b] : p.pairs()) rev.emplace_back(b, a);
  return close_strict_pairs(p.elements(), rev);
}

/// The unique minimal relation whose transitive closure is p's relation
/// (the Hasse diagram edge set), sorted lexicographically.
inline std::vector<LabelPair> transitive_reduction(const Poset& p) {
  std::vector<LabelPair> out;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool mediated = false;
      for (std::size_t c = 0; c < n && !mediated; ++c)
        mediated = p.less(a, c) && p.less(c, b);
      if (!mediated) out.emplace_back(p.label(a), p.label(b));
    }
  return out;
}

/// Restriction of p to `keep`. Throws UnknownElement for undeclared labels.
inline Poset induced(const Poset& p, const std::set<std::string>& keep) {
  for (const auto& l : keep) (void)p.index_of(l);
  std::vector<std::string> elements(keep.begin(), keep.end());
  std::vector<LabelPair> pairs;
  for (const auto& a : keep)
    for (const auto& b : keep)
      if (p.less(a, b)) pairs.emplace_back(a, b);
  return close_strict_pairs(std::move(elements), pairs);
}

/// Disjoint union; labels of part k are prefixed with "pk:" so parts can
/// never collide.
inline Poset disjoint_union(const std::vector<Poset>& parts) {
  std::vector<std::string> elements;
  std::vector<LabelPair> pairs;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::string prefix = "p" + std::to_string(k) + ":";
    for (const auto& l : parts[k].elements()) elements.push_back(prefix + l);
    for (const auto& [a, b] : parts[k].pairs())
      pairs.emplace_back(prefix + a, prefix + b);
  }
  return close_strict_pairs(std::move(elements), pairs);
}

/// An injective map between posets that preserves and reflects the strict
/// order: a < b in source iff map(a) < map(b) in target. Holds copies of
/// both posets so it stays valid on its own.
struct OrderEmbedding {
  Poset source;
  Poset target;
  std::vector<std::size_t> map;  // source index -> target index

  const std::string& image(const std::string& source_label) const {
    return target.label(map[source.index_of(source_label)]);
  }

  std::map<std::string, std::string> label_map() const {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < source.size(); ++i)
      m[source.label(i)] = target.label(map[i]);
    return m;
  }
};

/// Independent checker for OrderEmbedding: injectivity plus both directions
/// of the order condition on every pair. Kept separate from the search so a
/// found embedding is never trusted on the search's say-so.
inline bool verify_embedding(const OrderEmbedding& e) {
  const std::size_t n = e.source.size();
  if (e.map.size() != n) return false;
  std::set<std::size_t> seen;
  for (std::size_t t : e.map) {
    if (t >= e.target.size()) return false;
    if (!seen.insert(t).second) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (e.source.less(a, b) != e.target.less(e.map[a], e.map[b]))
        return false;
  return true;
}

namespace detail {

struct ElemStats {
  std::size_t height = 0, depth = 0, below = 0, above = 0, incomp = 0;
};

inline std::vector<ElemStats> element_stats(const Poset& p) {
  std::vector<ElemStats> st(p.size());
  auto h = heights(p);
  auto d = heights(dual(p));
  for (std::size_t i = 0; i < p.size(); ++i) {
    st[i].height = h[i];
    st[i].depth = d[i];
    st[i].below = p.below_count(i);
    st[i].above = p.above_count(i);
    st[i].incomp = p.size() - 1 - st[i].below - st[i].above;
  }
  return st;
}

// Every chain, antichain and degree below a source element must fit below
// its image, so all five statistics must be dominated.
inline bool stats_compatible(const ElemStats& s, const ElemStats& t) {
  return t.height >= s.height && t.depth >= s.depth && t.below >= s.below &&
         t.above >= s.above && t.incomp >= s.incomp;
}

}  // namespace detail

/// Backtracking search for an order embedding of `sub` into `sup`.
///
/// Candidates are pruned by (height, depth, degree) domination and by
/// consistency with everything already assigned; the next element to assign
/// is always the one with the fewest live candidates (ties broken by element
/// index), so the result is deterministic given the element order. Returns
/// the first embedding found, which always passes verify_embedding.
inline std::optional<OrderEmbedding> find_embedding(const Poset& sub,
                                                    const Poset& sup) {
  const std::size_t n = sub.size(), m = sup.size();
  if (n > m) return std::nullopt;
  if (n == 0) return OrderEmbedding{sub, sup, {}};

  const auto sstat = detail::element_stats(sub);
  const auto tstat = detail::element_stats(sup);

  std::vector<std::size_t> image(n, m);  // m = unassigned
  std::vector<char> used(m, 0);

  auto candidates = [&](std::size_t i) {
    std::vector<std::size_t> cs;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || !detail::stats_compatible(sstat[i], tstat[j])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (image[k] == m || k == i) continue;
        ok = sub.less(i, k) == sup.less(j, image[k]) &&
             sub.less(k, i) == sup.less(image[k], j);
      }
      if (ok) cs.push_back(j);
    }
    return cs;
  };

  auto search = [&](auto&& self, std::size_t assigned) -> bool {
    if (assigned == n) return true;
    std::size_t best = n;
    std::vector<std::size_t> best_cs;
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i] != m) continue;
      auto cs = candidates(i);
      if (best == n || cs.size() < best_cs.size()) {
        best = i;
        best_cs = std::move(cs);
        if (best_cs.empty()) return false;
      }
    }
    for (std::size_t j : best_cs) {
      image[best] = j;
      used[j] = 1;
      if (self(self, assigned + 1)) return true;
      image[best] = m;
      used[j] = 0;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return OrderEmbedding{sub, sup, std::move(image)};
}

/// Composition of embeddings; requires ab's target to equal bc's source.
inline OrderEmbedding compose(const OrderEmbedding& ab,
                              const OrderEmbedding& bc) {
  if (!(ab.target == bc.source))
    throw Error("compose: middle posets do not match");
  OrderEmbedding e{ab.source, bc.target, {}};
  e.map.reserve(ab.map.size());
  for (std::size_t t : ab.map) e.map.push_back(bc.map[t]);
  return e;
}

/// True iff a bijective order-embedding a -> b exists. A bijective embedding
/// is automatically an isomorphism, since embeddings reflect the order.
inline bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.relation_size() != b.relation_size())
    return false;
  // Profile pre-check: the multisets of element statistics must agree.
  auto profile = [](const Poset& p) {
    auto st = detail::element_stats(p);
    std::vector<std::array<std::size_t, 5>> v;
    for (const auto& s : st)
      v.push_back({s.height, s.depth, s.below, s.above, s.incomp});
    std::sort(v.begin(), v.end());
    return v;
  };
  if (profile(a) != profile(b)) return false;
  return find_embedding(a, b).has_value();
}

}  // namespace ordpat
