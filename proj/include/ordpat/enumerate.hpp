#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ordpat/errors.hpp"
#include "ordpat/poset.hpp"

namespace ordpat {

inline constexpr std::size_t kDefaultEnumBound = 6;

namespace detail {

// Lexicographically least row-major adjacency bitstring over all relabelings.
// Only meant for the small n used by enumeration.
inline std::string canonical_form(const std::vector<std::vector<char>>& lt) {
  const std::size_t n = lt.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(n * n, '0');
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cur[i * n + j] = lt[perm[i]][perm[j]] ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<std::vector<char>> relation_matrix(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(i, j)) lt[i][j] = 1;
  return lt;
}

}  // namespace detail

/// Every poset on n elements, exactly once up to isomorphism, with elements
/// labeled "e0".."e{n-1}".
///
/// Generation adds one element at a time: a new element is glued onto each
/// smaller poset with an arbitrary down-closed set below it and a compatible
/// up-closed set above it, which keeps every intermediate relation closed;
/// duplicates are rejected by canonical form. Throws BoundExceeded above
/// `bound` (runtime grows super-exponentially).
inline std::vector<Poset> enumerate_posets(std::size_t n,
                                           std::size_t bound = kDefaultEnumBound) {
  if (n > bound) throw BoundExceeded("enumerate_posets", n, bound);

  auto labels = [](std::size_t k) {
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < k; ++i) ls.push_back("e" + std::to_string(i));
    return ls;
  };

  std::vector<Poset> level{close_strict_pairs(labels(0), {})};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::string, Poset> next;
    for (const Poset& p : level) {
      const std::size_t sz = p.size();
      // All down-closed / up-closed subsets of p, as bitmasks.
      std::vector<unsigned> downs, ups;
      for (unsigned mask = 0; mask < (1u << sz); ++mask) {
        bool down = true, up = true;
        for (std::size_t i = 0; i < sz && (down || up); ++i) {
          if (!(mask >> i & 1u)) continue;
          for (std::size_t j = 0; j < sz; ++j) {
            if (p.less(j, i) && !(mask >> j & 1u)) down = false;
            if (p.less(i, j) && !(mask >> j & 1u)) up = false;
          }
        }
        if (down) downs.push_back(mask);
        if (up) ups.push_back(mask);
      }
      const std::string fresh = "e" + std::to_string(k - 1);
      for (unsigned d : downs)
        for (unsigned u : ups) {
          if (d & u) continue;
          // Closure must add nothing between old elements: everything below
          // the new element must already sit below everything above it.
          bool ok = true;
          for (std::size_t i = 0; i < sz && ok; ++i) {
            if (!(d >> i & 1u)) continue;
            for (std::size_t j = 0; j < sz && ok; ++j)
              if ((u >> j & 1u) && !p.less(i, j)) ok = false;
          }
          if (!ok) continue;
          std::vector<LabelPair> pairs = p.pairs();
          for (std::size_t i = 0; i < sz; ++i) {
            if (d >> i & 1u) pairs.emplace_back(p.label(i), fresh);
            if (u >> i & 1u) pairs.emplace_back(fresh, p.label(i));
          }
          auto ls = p.elements();
          ls.push_back(fresh);
          Poset q = close_strict_pairs(std::move(ls), pairs);
          std::string canon = detail::canonical_form(detail::relation_matrix(q));
          next.emplace(std::move(canon), std::move(q));
        }
    }
    level.clear();
    for (auto& [canon, q] : next) level.push_back(std::move(q));
  }
  return level;
}

}  // namespace ordpat
