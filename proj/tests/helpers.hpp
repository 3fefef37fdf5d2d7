#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ordpat/poset.hpp"

namespace ordpat::testing {

/// n pairwise incomparable points x0..x{n-1}.
inline Poset antichain(std::size_t n) {
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back("x" + std::to_string(i));
  return close_strict_pairs(std::move(elems), {});
}

/// A random n-element poset: pick a random linear extension, keep each
/// extension-compatible pair with probability `density`, close. The kept
/// relation is acyclic by construction, so closing always succeeds, and
/// every n-element poset arises this way with positive probability.
inline Poset random_poset(std::mt19937& rng, std::size_t n,
                          double density = 0.4) {
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back("x" + std::to_string(i));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<LabelPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (keep(rng)) pairs.emplace_back(elems[order[a]], elems[order[b]]);
  return close_strict_pairs(std::move(elems), pairs);
}

}  // namespace ordpat::testing
